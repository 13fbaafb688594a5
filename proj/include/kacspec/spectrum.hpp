#pragma once

// Exact eigendecomposition of the Kac matrix S_n (a_i = i, b_i = n+1-i).
//
// v is an eigenvector for lambda iff i v_i + (n-i) v_{i+2} = lambda v_{i+1} for
// i = 0..n (v_0 and v_{n+2} carry zero coefficients). For lambda = n - 2d:
// fix v_1 = 1, solve those relations forward for v_2..v_{d+1}, interpolate
// them by p with deg p <= d, and the vector (p(1), ..., p(n+1)) is the
// eigenvector. The interpolant satisfies
//
//   x p(x) + (n - x) p(x+2) = lambda p(x+1)
//
// identically, which is what makes the construction work.

#include "kacspec/charpoly.hpp"
#include "kacspec/number.hpp"
#include "kacspec/polynomial.hpp"
#include "kacspec/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace kacspec {

/// S_n as a dense matrix over Scalar.
template <typename Scalar = Integer>
DenseMatrix<Scalar> kac_matrix(std::size_t n) {
  return tridiagonal_matrix<Scalar>(kac_weights(n));
}

/// n, n-2, ..., -n.
std::vector<std::int64_t> eigenvalues(std::size_t n);

/// Newton forward-difference interpolant on the nodes 1, 2, ..., d+1:
///   p(x) = sum_m diff[m] * C(x - 1, m),   diff[m] = Delta^m p(1).
class InterpolatingPolynomial {
 public:
  /// values[i] is p(i + 1). Throws std::invalid_argument if empty.
  explicit InterpolatingPolynomial(const std::vector<Rational>& values);

  std::size_t degree_bound() const { return differences_.size() - 1; }
  /// Actual degree; -1 for the zero polynomial.
  long degree() const;
  const std::vector<Rational>& forward_differences() const { return differences_; }
  /// Coefficient of x^{degree_bound()} in the monomial basis (zero when degree < bound).
  Rational leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  /// p(first), p(first+1), ..., p(first+count-1), by stepping the difference
  /// table (additions only).
  std::vector<Rational> values_from(std::int64_t first, std::size_t count) const;
  Polynomial<Rational> to_monomial() const;

 private:
  std::vector<Rational> differences_;
};

struct EigenPair {
  std::size_t n = 0;
  std::size_t d = 0;
  std::int64_t lambda = 0;
  std::vector<Rational> seed;  // v_1..v_{d+1}, v_1 = 1
  InterpolatingPolynomial poly;
  RationalVector vector;  // p(1)..p(n+1)
};

/// Throws std::invalid_argument unless n >= 1 and d <= n.
EigenPair eigenvector(std::size_t n, std::size_t d);

/// All n+1 pairs, d = 0..n.
std::vector<EigenPair> eigenpairs(std::size_t n);

/// An eigenpair together with the outcome of both exact checks.
struct CheckedPair {
  EigenPair pair;
  bool eigen_equation = false;
  bool functional_equation = false;
};

/// eigenpairs(n) with verify_eigenpair and verify_functional_equation applied once each.
std::vector<CheckedPair> checked_eigenpairs(std::size_t n);

/// S_n * vector == lambda * vector exactly, and vector != 0.
bool verify_eigenpair(const EigenPair& pair);

/// Checks the functional equation of the interpolant at x = 0, 1, ..., sample_count-1.
/// Both sides have degree <= d, so d+1 samples settle it; fewer throws
/// std::invalid_argument.
bool verify_functional_equation(const EigenPair& pair, std::size_t sample_count);
inline bool verify_functional_equation(const EigenPair& pair) {
  return verify_functional_equation(pair, pair.d + 2);
}

/// Denominators cleared, common factor removed, first nonzero entry positive.
std::vector<Integer> integer_scaled(const RationalVector& v);

/// +1 if v_i == v_{n+2-i} for all i, -1 if v_i == -v_{n+2-i}, empty otherwise.
/// Reported only; no symmetry is claimed for these eigenvectors.
std::optional<int> reflection_parity(const RationalVector& v);

/// x^e * prod_{1<=j<=n, j == n mod 2} (x^2 - j^2), e = 1 for even n and 0 for odd n.
CharPoly expanded_charpoly(std::size_t n);

}  // namespace kacspec
