#pragma once

#include "kacspec/number.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace kacspec {

/// Off-diagonal weights of the (n+1)x(n+1) zero-diagonal tridiagonal matrix M_n:
/// subdiagonal a_1..a_n and superdiagonal b_1..b_n. Immutable once built.
///
/// Public accessors are 1-based (j in 1..n) to match the usual notation; the
/// underlying vectors are 0-based.
class WeightSequence {
 public:
  /// Throws std::invalid_argument if the lists are empty or differ in length.
  WeightSequence(std::vector<Integer> a, std::vector<Integer> b);

  std::size_t n() const { return a_.size(); }
  const Integer& a(std::size_t j) const { return a_.at(j - 1); }
  const Integer& b(std::size_t j) const { return b_.at(j - 1); }
  Integer product(std::size_t j) const { return a(j) * b(j); }

  const std::vector<Integer>& subdiagonal() const { return a_; }
  const std::vector<Integer>& superdiagonal() const { return b_; }

  /// a_j * b_j for j = 1..n, stored 0-based.
  std::vector<Integer> products() const;

  /// True iff a_i == i and b_i == n + 1 - i for every i.
  bool is_kac() const;

  friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

 private:
  std::vector<Integer> a_;
  std::vector<Integer> b_;
};

/// a_i = i, b_i = n + 1 - i. Throws std::invalid_argument for n == 0.
WeightSequence kac_weights(std::size_t n);

/// Stores the given lists verbatim. Zero and negative weights are accepted.
WeightSequence custom_weights(std::vector<Integer> a, std::vector<Integer> b);

/// Reads {"a": [...], "b": [...]}. Entries may be JSON integers or decimal
/// strings (for values beyond 64 bits). Throws std::invalid_argument.
WeightSequence weights_from_json(std::string_view document);

}  // namespace kacspec
