#pragma once

// Test-only reference computations. None of these call into the library's
// algorithms beyond its scalar types and WeightSequence accessors.

#include "kacspec/number.hpp"
#include "kacspec/weights.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace kacspec::oracle {

/// Every subset of [n] as a bitmask, filtered; bit j-1 stands for j.
template <typename Keep>
std::vector<std::vector<std::size_t>> subsets_by_mask(std::size_t n, std::size_t k, Keep keep) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    std::vector<std::size_t> s;
    for (std::size_t j = 1; j <= n; ++j) {
      if (mask & (std::uint64_t{1} << (j - 1))) s.push_back(j);
    }
    if (keep(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<std::size_t>> no_two_consecutive(std::size_t n, std::size_t k) {
  return subsets_by_mask(n, k, [](const std::vector<std::size_t>& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (s[i] == s[i - 1] + 1) return false;
    }
    return true;
  });
}

inline std::vector<std::vector<std::size_t>> parity_restricted(std::size_t n, std::size_t k) {
  return subsets_by_mask(n, k, [n](const std::vector<std::size_t>& s) {
    return std::all_of(s.begin(), s.end(), [n](std::size_t j) { return j % 2 == n % 2; });
  });
}

inline Integer weighted_sum(const std::vector<std::vector<std::size_t>>& family,
                            const std::vector<Integer>& weight_of /* 1-based, index 0 unused */) {
  Integer total = 0;
  for (const auto& s : family) {
    Integer term = 1;
    for (auto j : s) term *= weight_of[j];
    total += term;
  }
  return total;
}

/// Leibniz determinant over all permutations; only for tiny matrices.
inline Integer leibniz_determinant(const IntegerMatrix& m) {
  const auto size = static_cast<std::size_t>(m.rows());
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j) inversions += perm[i] > perm[j];
    Integer term = inversions % 2 == 0 ? 1 : -1;
    for (std::size_t i = 0; i < size && term != 0; ++i) {
      term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
    }
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// M_n built entry by entry from the weights (0-based rows and cols).
inline IntegerMatrix tridiagonal(const WeightSequence& w) {
  const auto size = static_cast<Eigen::Index>(w.n() + 1);
  IntegerMatrix m = IntegerMatrix::Zero(size, size);
  for (std::size_t j = 1; j <= w.n(); ++j) {
    m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j - 1)) = w.a(j);
    m(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(j)) = w.b(j);
  }
  return m;
}

/// Dense ascending coefficients of det(xI - M) recovered from its values at
/// x = 0..N by Lagrange interpolation, where each value is a Leibniz
/// determinant. Only for n <= 6.
inline std::vector<Integer> charpoly_by_interpolation(const WeightSequence& w) {
  const auto size = static_cast<Eigen::Index>(w.n() + 1);
  const IntegerMatrix m = tridiagonal(w);
  std::vector<Rational> coeffs(static_cast<std::size_t>(size) + 1, Rational(0));
  for (Eigen::Index node = 0; node <= size; ++node) {
    const IntegerMatrix shifted = IntegerMatrix::Identity(size, size) * Integer(node) - m;
    const Rational value(leibniz_determinant(shifted));
    // basis polynomial prod_{other != node} (x - other) / (node - other), ascending
    std::vector<Rational> basis{Rational(1)};
    Rational scale = 1;
    for (Eigen::Index other = 0; other <= size; ++other) {
      if (other == node) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        next[i + 1] += basis[i];
        next[i] -= basis[i] * Rational(other);
      }
      basis = std::move(next);
      scale *= Rational(node - other);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += value * basis[i] / scale;
  }
  std::vector<Integer> out;
  for (const auto& c : coeffs) {
    if (boost::multiprecision::denominator(c) != 1) throw std::logic_error("non-integral charpoly coefficient");
    out.push_back(Integer(boost::multiprecision::numerator(c)));
  }
  return out;
}

inline WeightSequence random_weights(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<Integer> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.emplace_back(dist(rng));
    b.emplace_back(dist(rng));
  }
  return WeightSequence(std::move(a), std::move(b));
}

}  // namespace kacspec::oracle
