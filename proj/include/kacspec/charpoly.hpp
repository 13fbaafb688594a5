#pragma once

// Characteristic polynomial chi_n(x) = det(xI - M_n) of the zero-diagonal
// tridiagonal matrix M_n.
//
// Only every other coefficient of chi_n can be nonzero: expanding the
// determinant along the last row gives
//
//   chi_m(x) = x * chi_{m-1}(x) - a_m b_m * chi_{m-2}(x),   chi_{-1} = 1, chi_0 = x,
//
// so chi_n is x^{n+1} plus terms x^{n+1-2k}. CharPoly keeps only those terms:
// coeffs[k] = d_{k,n}, the coefficient of x^{n+1-2k}, for k = 0..floor((n+1)/2).

#include "kacspec/number.hpp"
#include "kacspec/polynomial.hpp"
#include "kacspec/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace kacspec {

inline constexpr std::size_t kDeterminantOracleCap = 12;

class CharPoly {
 public:
  /// Throws std::invalid_argument unless coeffs has floor((n+1)/2)+1 entries,
  /// n >= 1 and coeffs[0] == 1.
  CharPoly(std::size_t n, std::vector<Integer> coeffs);

  /// Compresses a dense chi_n. Throws std::invalid_argument if it is not monic
  /// of degree n+1 or has a nonzero coefficient of the wrong parity.
  static CharPoly from_dense(std::size_t n, const IntegerPolynomial& dense);

  std::size_t n() const { return n_; }
  /// Largest k with a stored coefficient: floor((n+1)/2).
  std::size_t max_k() const { return coeffs_.size() - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  /// d_{k,n}; zero for k < 0 or k > max_k().
  Integer coefficient(std::int64_t k) const;

  IntegerPolynomial dense() const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::size_t n_;
  std::vector<Integer> coeffs_;
};

/// Free-function form of CharPoly::coefficient.
inline Integer coefficient(const CharPoly& p, std::int64_t k) { return p.coefficient(k); }

/// M_n as a dense (n+1)x(n+1) matrix: entry (j, j-1) = a_j, entry (j-1, j) = b_j
/// (0-based rows/cols), zero elsewhere.
template <typename Scalar = Integer>
DenseMatrix<Scalar> tridiagonal_matrix(const WeightSequence& w) {
  const auto size = static_cast<Eigen::Index>(w.n() + 1);
  DenseMatrix<Scalar> m = DenseMatrix<Scalar>::Zero(size, size);
  for (Eigen::Index j = 1; j < size; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    m(j, j - 1) = Scalar(w.a(idx));
    m(j - 1, j) = Scalar(w.b(idx));
  }
  return m;
}

/// Coefficients via the three-term recurrence; O(n * floor((n+1)/2)) multiplications.
CharPoly charpoly_recurrence(const WeightSequence& w);

/// Dense det(xI - M_n) by memoised Laplace expansion over exact polynomial
/// entries. Uses nothing about the tridiagonal structure beyond skipping zero
/// entries, so it is independent of the recurrence. Exponential in n.
/// Throws CapExceeded when w.n() > cap.
IntegerPolynomial characteristic_polynomial_cofactor(const IntegerMatrix& m);
IntegerPolynomial charpoly_direct_dense(const WeightSequence& w, std::size_t cap = kDeterminantOracleCap);

/// Determinant oracle compressed to a CharPoly; must equal charpoly_recurrence(w).
CharPoly charpoly_direct(const WeightSequence& w, std::size_t cap = kDeterminantOracleCap);

/// Fraction-free (Bareiss) determinant of a square integer matrix. Every
/// division is exact, so entries never leave the integers.
template <typename Derived>
Integer bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  IntegerMatrix m = input;
  const Eigen::Index size = m.rows();
  if (size != m.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  if (size == 0) return Integer(1);
  Integer sign = 1;
  Integer previous_pivot = 1;
  for (Eigen::Index k = 0; k + 1 < size; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < size && m(swap, k) == 0) ++swap;
      if (swap == size) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < size; ++i) {
      for (Eigen::Index j = k + 1; j < size; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous_pivot;
      }
      m(i, k) = 0;
    }
    previous_pivot = m(k, k);
  }
  return sign * m(size - 1, size - 1);
}

}  // namespace kacspec
