#include "kacspec/io.hpp"

#include <string>

namespace kacspec {

namespace {

void put(std::ostream& out, const std::optional<Integer>& value) {
  out << ',';
  if (value) out << to_decimal(*value);
}

}  // namespace

void write_reports_csv(std::ostream& out, std::span<const IdentityReport> reports, const RouteSet& routes) {
  out << "n,k";
  if (routes.lhs_dp) out << ",lhs";
  if (routes.rhs_dp) out << ",rhs_dp";
  if (routes.rhs_enum) out << ",rhs_enum";
  if (routes.charpoly) out << ",charpoly_abs";
  if (routes.pyramid) out << ",pyramid_layer,pyramid_slice";
  out << ",equal\n";
  for (const auto& r : reports) {
    out << r.n << ',' << r.k;
    if (routes.lhs_dp) put(out, r.lhs);
    if (routes.rhs_dp) put(out, r.rhs);
    if (routes.rhs_enum) put(out, r.rhs_enum);
    if (routes.charpoly) put(out, r.charpoly_route);
    if (routes.pyramid) {
      put(out, r.pyramid_layer);
      put(out, r.pyramid_slice);
    }
    out << ',' << (r.all_equal ? "true" : "false") << '\n';
  }
}

nlohmann::ordered_json reports_to_json(std::span<const IdentityReport> reports) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json row{{"n", r.n}, {"k", r.k}};
    const auto add = [&](const char* key, const std::optional<Integer>& v) {
      if (v) row[key] = to_decimal(*v);
    };
    add("lhs", r.lhs);
    add("rhs_dp", r.rhs);
    add("rhs_enum", r.rhs_enum);
    add("charpoly_abs", r.charpoly_route);
    add("pyramid_layer", r.pyramid_layer);
    add("pyramid_slice", r.pyramid_slice);
    row["equal"] = r.all_equal;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_charpoly_csv(std::ostream& out, const CharPoly& p) {
  out << "n,k,d_kn\n";
  for (std::size_t k = 0; k <= p.max_k(); ++k) out << p.n() << ',' << k << ',' << to_decimal(p.coeffs()[k]) << '\n';
}

nlohmann::ordered_json charpoly_to_json(const CharPoly& p) {
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return {{"n", p.n()}, {"coeffs", std::move(coeffs)}};
}

CharPoly charpoly_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("coeffs") || !doc["n"].is_number_unsigned() ||
      !doc["coeffs"].is_array()) {
    throw std::invalid_argument("charpoly JSON needs unsigned \"n\" and array \"coeffs\"");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("charpoly coefficients must be decimal strings");
    coeffs.push_back(parse_integer(c.get<std::string>()));
  }
  return CharPoly(doc["n"].get<std::size_t>(), std::move(coeffs));
}

nlohmann::ordered_json spectrum_to_json(std::size_t n, std::span<const CheckedPair> pairs) {
  auto list = nlohmann::ordered_json::array();
  for (const auto& [pair, eigen_ok, functional_ok] : pairs) {
    auto vec = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < pair.vector.size(); ++i) vec.push_back(to_fraction(pair.vector(i)));
    auto scaled = nlohmann::ordered_json::array();
    for (const auto& x : integer_scaled(pair.vector)) scaled.push_back(to_decimal(x));
    const auto parity = reflection_parity(pair.vector);
    list.push_back({{"d", pair.d},
                    {"lambda", pair.lambda},
                    {"vector", std::move(vec)},
                    {"integer_vector", std::move(scaled)},
                    {"degree", pair.poly.degree()},
                    {"leading_coefficient", to_fraction(pair.poly.leading_coefficient())},
                    {"reflection", parity ? nlohmann::ordered_json(*parity > 0 ? "even" : "odd") : nlohmann::ordered_json()},
                    {"verified", eigen_ok && functional_ok},
                    {"functional_equation", functional_ok}});
  }
  return {{"n", n},
          {"eigenvalues", eigenvalues(n)},
          {"charpoly_matches_product", expanded_charpoly(n) == charpoly_recurrence(kac_weights(n))},
          {"pairs", std::move(list)}};
}

void write_spectrum_csv(std::ostream& out, std::span<const CheckedPair> pairs) {
  out << "n,d,lambda,i,value,verified\n";
  for (const auto& [pair, eigen_ok, functional_ok] : pairs) {
    const bool ok = eigen_ok && functional_ok;
    for (Eigen::Index i = 0; i < pair.vector.size(); ++i) {
      out << pair.n << ',' << pair.d << ',' << pair.lambda << ',' << (i + 1) << ',' << to_fraction(pair.vector(i))
          << ',' << (ok ? "true" : "false") << '\n';
    }
  }
}

}  // namespace kacspec
