#include "kacspec/symmfunc.hpp"

#include "kacspec/charpoly.hpp"
#include "kacspec/pyramid.hpp"

#include <algorithm>
#include <string>

namespace kacspec {

namespace {

void check_enumeration_cap(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw CapExceeded("subset enumeration limited to n <= " + std::to_string(max_n) + ", got n = " +
                      std::to_string(n));
  }
}

Integer at_or_zero(const std::vector<Integer>& table, std::int64_t k) {
  if (k < 0 || static_cast<std::size_t>(k) >= table.size()) return Integer(0);
  return table[static_cast<std::size_t>(k)];
}

}  // namespace

void for_each_subset(const SubsetFamily& f, const std::function<void(std::span<const std::size_t>)>& visit,
                     std::size_t max_n) {
  check_enumeration_cap(f.n, max_n);
  if (f.k < 0) return;
  const auto k = static_cast<std::size_t>(f.k);
  const bool parity = f.kind == SubsetKind::ParityRestricted;
  const std::size_t first = parity ? (f.n % 2 == 0 ? 2 : 1) : 1;
  const std::size_t stride = parity ? 2 : 1;

  Subset chosen;
  chosen.reserve(k);
  // Elements are tried in increasing order, so subsets come out lexicographically.
  const std::function<void(std::size_t)> extend = [&](std::size_t from) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    // Both families need a gap of at least 2 after each chosen element.
    for (std::size_t j = from; j <= f.n; j += stride) {
      chosen.push_back(j);
      extend(j + 2);
      chosen.pop_back();
    }
  };
  extend(first);
}

std::vector<Subset> enumerate_subsets(const SubsetFamily& f, std::size_t max_n) {
  std::vector<Subset> out;
  for_each_subset(f, [&](std::span<const std::size_t> s) { out.emplace_back(s.begin(), s.end()); }, max_n);
  return out;
}

std::vector<Integer> lhs_sums(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lhs_sums: n must be positive");
  const std::size_t admissible = (n + 1) / 2;
  std::vector<Integer> e(admissible + 1, Integer(0));
  e[0] = 1;
  std::size_t seen = 0;
  for (std::size_t j = (n % 2 == 0) ? 2 : 1; j <= n; j += 2) {
    const Integer square = Integer(j) * j;
    ++seen;
    for (std::size_t k = seen; k >= 1; --k) e[k] += square * e[k - 1];
  }
  return e;
}

Integer lhs_sum(std::size_t n, std::int64_t k) { return at_or_zero(lhs_sums(n), k); }

std::vector<Integer> rhs_sums_dp(const WeightSequence& w) {
  // Rolling rows S_{., m-2} and S_{., m-1}; S_{., -1} = S_{., 0} = [1].
  std::vector<Integer> older{Integer(1)};
  std::vector<Integer> prev{Integer(1)};
  for (std::size_t m = 1; m <= w.n(); ++m) {
    const Integer p = w.product(m);
    std::vector<Integer> next(((m + 1) / 2) + 1, Integer(0));
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < prev.size()) next[k] = prev[k];
      if (k >= 1 && k - 1 < older.size()) next[k] += p * older[k - 1];
    }
    older = std::move(prev);
    prev = std::move(next);
  }
  return prev;
}

Integer rhs_sum_dp(std::size_t n, std::int64_t k) { return at_or_zero(rhs_sums_dp(kac_weights(n)), k); }

Integer rhs_sum_dp(const WeightSequence& w, std::int64_t k) { return at_or_zero(rhs_sums_dp(w), k); }

Integer rhs_sum_enum(const WeightSequence& w, std::int64_t k, std::size_t max_n) {
  const auto products = w.products();
  Integer total = 0;
  for_each_subset({w.n(), k, SubsetKind::NoTwoConsecutive},
                  [&](std::span<const std::size_t> subset) {
                    Integer term = 1;
                    for (auto j : subset) term *= products[j - 1];
                    total += term;
                  },
                  max_n);
  return total;
}

Integer lhs_sum_enum(std::size_t n, std::int64_t k, std::size_t max_n) {
  Integer total = 0;
  for_each_subset({n, k, SubsetKind::ParityRestricted},
                  [&](std::span<const std::size_t> subset) {
                    Integer term = 1;
                    for (auto j : subset) term *= Integer(j) * j;
                    total += term;
                  },
                  max_n);
  return total;
}

std::vector<Integer> IdentityReport::values() const {
  std::vector<Integer> out;
  for (const auto* field : {&lhs, &rhs, &rhs_enum, &charpoly_route, &pyramid_layer, &pyramid_slice}) {
    if (field->has_value()) out.push_back(**field);
  }
  return out;
}

std::vector<IdentityReport> verify_identities(std::size_t n, std::span<const std::int64_t> ks,
                                              const RouteSet& routes, const Limits& limits) {
  if (n == 0) throw std::invalid_argument("verify_identity: n must be positive");
  if (routes.empty()) throw std::invalid_argument("verify_identity: no routes selected");
  if (routes.rhs_enum) check_enumeration_cap(n, limits.enumeration_max_n);
  if (routes.pyramid && n > limits.pyramid_max_n) {
    throw CapExceeded("pyramid brute force limited to n <= " + std::to_string(limits.pyramid_max_n) +
                      ", got n = " + std::to_string(n));
  }

  const auto weights = kac_weights(n);
  std::vector<Integer> lhs_table, rhs_table;
  std::optional<CharPoly> poly;
  std::optional<PyramidModel> pyramid;
  if (routes.lhs_dp) lhs_table = lhs_sums(n);
  if (routes.rhs_dp) rhs_table = rhs_sums_dp(weights);
  if (routes.charpoly) poly = charpoly_recurrence(weights);
  if (routes.pyramid) pyramid = build_pyramid(n);

  std::vector<IdentityReport> out;
  out.reserve(ks.size());
  for (const auto k : ks) {
    IdentityReport r;
    r.n = n;
    r.k = k;
    if (routes.lhs_dp) r.lhs = at_or_zero(lhs_table, k);
    if (routes.rhs_dp) r.rhs = at_or_zero(rhs_table, k);
    if (routes.rhs_enum) r.rhs_enum = rhs_sum_enum(weights, k, limits.enumeration_max_n);
    if (routes.charpoly) r.charpoly_route = abs(poly->coefficient(k));
    if (routes.pyramid) {
      r.pyramid_layer = count_layer_distinct(*pyramid, k, limits.pyramid_budget);
      r.pyramid_slice = count_slice_separated(*pyramid, k, limits.pyramid_budget);
    }
    const auto values = r.values();
    r.all_equal = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values.front(); });
    out.push_back(std::move(r));
  }
  return out;
}

IdentityReport verify_identity(std::size_t n, std::int64_t k, bool with_pyramid, const Limits& limits) {
  RouteSet routes;
  routes.pyramid = with_pyramid;
  const std::int64_t ks[] = {k};
  return verify_identities(n, ks, routes, limits).front();
}

}  // namespace kacspec
