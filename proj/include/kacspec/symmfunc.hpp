#pragma once

// The two sides of the identity
//
//   sum_{J in P(n,k)} prod_{j in J} j^2  ==  sum_{J in N(n,k)} prod_{j in J} j(n+1-j)
//
// where P(n,k) are the k-subsets of [n] whose elements are all congruent to n
// mod 2, and N(n,k) are the k-subsets of [n] with no two consecutive integers.
//
// Each side is available by explicit enumeration (exponential, capped) and by
// an O(n*k) dynamic programme:
//  - left: elementary symmetric functions of {j^2 : j == n mod 2},
//          e_k <- e_k + j^2 e_{k-1};
//  - right: S_{k,m} = S_{k,m-1} + a_m b_m S_{k-1,m-2}, the unsigned form of the
//          characteristic-polynomial recurrence. Its generating form is the
//          degree-k part of prod_j (1 + x_j a_j b_j) with every monomial
//          holding two consecutive x_j discarded; the formal variables x_j
//          are never materialised, the recurrence is exactly that truncation.
//
// k < 0 and k beyond the largest admissible subset size give 0; k = 0 gives 1
// (the empty subset with its empty product), matching the monic d_{0,n} = 1.

#include "kacspec/limits.hpp"
#include "kacspec/number.hpp"
#include "kacspec/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace kacspec {

enum class SubsetKind { ParityRestricted, NoTwoConsecutive };

struct SubsetFamily {
  std::size_t n;
  std::int64_t k;
  SubsetKind kind;
};

using Subset = std::vector<std::size_t>;

/// Calls `visit` once per qualifying subset (sorted, 1-based elements), in
/// lexicographic order. Throws CapExceeded when f.n > max_n.
void for_each_subset(const SubsetFamily& f, const std::function<void(std::span<const std::size_t>)>& visit,
                     std::size_t max_n = Limits{}.enumeration_max_n);

/// Collects for_each_subset into a vector.
std::vector<Subset> enumerate_subsets(const SubsetFamily& f, std::size_t max_n = Limits{}.enumeration_max_n);

/// Left side for every k = 0..ceil(n/2) (index = k).
std::vector<Integer> lhs_sums(std::size_t n);
Integer lhs_sum(std::size_t n, std::int64_t k);

/// Unsigned no-two-consecutive sums for general weights, every k = 0..floor((n+1)/2).
std::vector<Integer> rhs_sums_dp(const WeightSequence& w);
/// Right side with Kac weights a_j b_j = j(n+1-j).
Integer rhs_sum_dp(std::size_t n, std::int64_t k);
Integer rhs_sum_dp(const WeightSequence& w, std::int64_t k);

/// Enumerated sum over N(n,k) of prod a_j b_j, n = w.n().
Integer rhs_sum_enum(const WeightSequence& w, std::int64_t k, std::size_t max_n = Limits{}.enumeration_max_n);
/// Enumerated left side (sum over P(n,k) of prod j^2).
Integer lhs_sum_enum(std::size_t n, std::int64_t k, std::size_t max_n = Limits{}.enumeration_max_n);

/// Which independent routes an identity check runs.
struct RouteSet {
  bool lhs_dp = true;
  bool rhs_dp = true;
  bool rhs_enum = false;
  bool charpoly = true;
  bool pyramid = false;

  bool empty() const { return !(lhs_dp || rhs_dp || rhs_enum || charpoly || pyramid); }
  static RouteSet all() { return {true, true, true, true, true}; }
};

/// One (n, k) cell of an identity check. Absent fields are routes not run.
struct IdentityReport {
  std::size_t n = 0;
  std::int64_t k = 0;
  std::optional<Integer> lhs;             // left side, DP
  std::optional<Integer> rhs;             // right side, DP
  std::optional<Integer> rhs_enum;        // right side, enumeration
  std::optional<Integer> charpoly_route;  // |d_{k,n}| for Kac weights
  std::optional<Integer> pyramid_layer;   // layer-distinct cube selections
  std::optional<Integer> pyramid_slice;   // slice-separated cube selections
  bool all_equal = false;

  /// Present values in the order above.
  std::vector<Integer> values() const;
};

/// lhs, rhs and charpoly routes, plus both pyramid counts when requested.
/// Throws CapExceeded when with_pyramid and n exceeds the pyramid cap.
IdentityReport verify_identity(std::size_t n, std::int64_t k, bool with_pyramid, const Limits& limits = {});

/// Runs the selected routes for every k in ks, sharing per-n work (one
/// characteristic polynomial, one DP table per side). Throws CapExceeded when
/// an exponential route is selected beyond its cap.
std::vector<IdentityReport> verify_identities(std::size_t n, std::span<const std::int64_t> ks,
                                              const RouteSet& routes, const Limits& limits = {});

}  // namespace kacspec
