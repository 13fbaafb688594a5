#include "kacspec/weights.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <utility>

namespace kacspec {

WeightSequence::WeightSequence(std::vector<Integer> a, std::vector<Integer> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.empty() || b_.empty()) throw std::invalid_argument("weight sequences must be nonempty");
  if (a_.size() != b_.size()) {
    throw std::invalid_argument("weight sequences differ in length: " + std::to_string(a_.size()) +
                                " vs " + std::to_string(b_.size()));
  }
}

std::vector<Integer> WeightSequence::products() const {
  std::vector<Integer> out;
  out.reserve(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) out.push_back(a_[i] * b_[i]);
  return out;
}

bool WeightSequence::is_kac() const {
  const auto size = n();
  for (std::size_t j = 1; j <= size; ++j) {
    if (a(j) != j || b(j) != size + 1 - j) return false;
  }
  return true;
}

WeightSequence kac_weights(std::size_t n) {
  if (n == 0) throw std::invalid_argument("kac_weights: n must be positive");
  std::vector<Integer> a, b;
  a.reserve(n);
  b.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    a.emplace_back(i);
    b.emplace_back(n + 1 - i);
  }
  return WeightSequence(std::move(a), std::move(b));
}

WeightSequence custom_weights(std::vector<Integer> a, std::vector<Integer> b) {
  return WeightSequence(std::move(a), std::move(b));
}

namespace {

std::vector<Integer> read_list(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw std::invalid_argument(std::string("weights document needs an array \"") + key + "\"");
  }
  std::vector<Integer> out;
  for (const auto& item : doc.at(key)) {
    if (item.is_number_integer()) {
      out.emplace_back(item.is_number_unsigned() ? Integer(item.get<std::uint64_t>())
                                                 : Integer(item.get<std::int64_t>()));
    } else if (item.is_string()) {
      out.push_back(parse_integer(item.get<std::string>()));
    } else {
      throw std::invalid_argument(std::string("non-integer entry in \"") + key + "\": " + item.dump());
    }
  }
  return out;
}

}  // namespace

WeightSequence weights_from_json(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("weights document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("weights document must be a JSON object");
  return custom_weights(read_list(doc, "a"), read_list(doc, "b"));
}

}  // namespace kacspec
