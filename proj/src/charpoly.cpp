#include "kacspec/charpoly.hpp"

#include <bit>
#include <string>

namespace kacspec {

CharPoly::CharPoly(std::size_t n, std::vector<Integer> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ == 0) throw std::invalid_argument("CharPoly: n must be positive");
  if (coeffs_.size() != (n_ + 1) / 2 + 1) {
    throw std::invalid_argument("CharPoly: expected " + std::to_string((n_ + 1) / 2 + 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
  if (coeffs_.front() != 1) throw std::invalid_argument("CharPoly: leading coefficient must be 1");
}

CharPoly CharPoly::from_dense(std::size_t n, const IntegerPolynomial& dense) {
  if (dense.degree() != static_cast<long>(n + 1) || dense.leading_coefficient() != 1) {
    throw std::invalid_argument("CharPoly::from_dense: not monic of degree n+1");
  }
  std::vector<Integer> coeffs;
  for (std::size_t power = 0; power <= n + 1; ++power) {
    const std::size_t gap = n + 1 - power;
    if (gap % 2 == 0) {
      coeffs.push_back(dense[power]);
    } else if (dense[power] != 0) {
      throw std::invalid_argument("CharPoly::from_dense: nonzero coefficient of x^" + std::to_string(power));
    }
  }
  // Collected from low to high power; coeffs[k] pairs with x^{n+1-2k}.
  return CharPoly(n, std::vector<Integer>(coeffs.rbegin(), coeffs.rend()));
}

Integer CharPoly::coefficient(std::int64_t k) const {
  if (k < 0 || static_cast<std::size_t>(k) > max_k()) return Integer(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

IntegerPolynomial CharPoly::dense() const {
  std::vector<Integer> c(n_ + 2, Integer(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[n_ + 1 - 2 * k] = coeffs_[k];
  return IntegerPolynomial(std::move(c));
}

CharPoly charpoly_recurrence(const WeightSequence& w) {
  // Rolling pair (chi_{m-2}, chi_{m-1}) in compressed form, seeded with
  // chi_{-1} = 1 and chi_0 = x (both have a single stored coefficient).
  std::vector<Integer> older{Integer(1)};
  std::vector<Integer> prev{Integer(1)};
  for (std::size_t m = 1; m <= w.n(); ++m) {
    const Integer p = w.product(m);
    std::vector<Integer> next(((m + 1) / 2) + 1, Integer(0));
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k < prev.size()) next[k] = prev[k];
      if (k >= 1 && k - 1 < older.size()) next[k] -= p * older[k - 1];
    }
    older = std::move(prev);
    prev = std::move(next);
  }
  return CharPoly(w.n(), std::move(prev));
}

IntegerPolynomial characteristic_polynomial_cofactor(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const auto size = static_cast<std::size_t>(m.rows());
  if (size >= 8 * sizeof(std::size_t) - 1) throw CapExceeded("cofactor expansion: matrix too large");
  const IntegerPolynomial x = IntegerPolynomial::monomial(1);

  // minors[mask] = det of (xI - m) restricted to the last popcount(mask) rows
  // and to the columns in mask. Expanded along the first of those rows.
  std::vector<IntegerPolynomial> minors(std::size_t{1} << size);
  minors[0] = IntegerPolynomial::constant(Integer(1));
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t row = size - static_cast<std::size_t>(std::popcount(mask));
    IntegerPolynomial det;
    std::size_t position = 0;
    for (std::size_t col = 0; col < size; ++col) {
      const std::size_t bit = std::size_t{1} << col;
      if ((mask & bit) == 0) continue;
      const auto r = static_cast<Eigen::Index>(row);
      const auto c = static_cast<Eigen::Index>(col);
      IntegerPolynomial entry = IntegerPolynomial::constant(-m(r, c));
      if (row == col) entry += x;
      const IntegerPolynomial& minor = minors[mask ^ bit];
      if (!entry.is_zero() && !minor.is_zero()) {
        if (position % 2 == 0) {
          det += entry * minor;
        } else {
          det -= entry * minor;
        }
      }
      ++position;
    }
    minors[mask] = std::move(det);
  }
  return minors.back();
}

IntegerPolynomial charpoly_direct_dense(const WeightSequence& w, std::size_t cap) {
  if (w.n() > cap) {
    throw CapExceeded("determinant oracle limited to n <= " + std::to_string(cap) + ", got n = " +
                      std::to_string(w.n()));
  }
  return characteristic_polynomial_cofactor(tridiagonal_matrix<Integer>(w));
}

CharPoly charpoly_direct(const WeightSequence& w, std::size_t cap) {
  return CharPoly::from_dense(w.n(), charpoly_direct_dense(w, cap));
}

}  // namespace kacspec
