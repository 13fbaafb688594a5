#include "kacspec/spectrum.hpp"

#include <string>

namespace kacspec {

std::vector<std::int64_t> eigenvalues(std::size_t n) {
  if (n == 0) throw std::invalid_argument("eigenvalues: n must be positive");
  std::vector<std::int64_t> out;
  out.reserve(n + 1);
  const auto top = static_cast<std::int64_t>(n);
  for (std::int64_t d = 0; d <= top; ++d) out.push_back(top - 2 * d);
  return out;
}

InterpolatingPolynomial::InterpolatingPolynomial(const std::vector<Rational>& values) {
  if (values.empty()) throw std::invalid_argument("InterpolatingPolynomial: no values");
  std::vector<Rational> row = values;
  differences_.reserve(values.size());
  while (!row.empty()) {
    differences_.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
}

long InterpolatingPolynomial::degree() const {
  for (auto m = static_cast<long>(differences_.size()) - 1; m >= 0; --m) {
    if (differences_[static_cast<std::size_t>(m)] != 0) return m;
  }
  return -1;
}

Rational InterpolatingPolynomial::leading_coefficient() const {
  Rational factorial = 1;
  for (std::size_t m = 2; m <= degree_bound(); ++m) factorial *= m;
  return differences_.back() / factorial;
}

Rational InterpolatingPolynomial::operator()(const Rational& x) const {
  const Rational t = x - 1;
  Rational binom = 1;  // C(t, m)
  Rational acc = 0;
  for (std::size_t m = 0; m < differences_.size(); ++m) {
    if (m > 0) binom = binom * (t - Rational(m - 1)) / Rational(m);
    acc += differences_[m] * binom;
  }
  return acc;
}

std::vector<Rational> InterpolatingPolynomial::values_from(std::int64_t first, std::size_t count) const {
  // table[m] = Delta^m p(x), starting at the first node x = 1.
  std::vector<Rational> table = differences_;
  const std::size_t top = table.size() - 1;
  for (std::int64_t x = 1; x > first; --x) {
    // Delta^m p(x-1) = Delta^m p(x) - Delta^{m+1} p(x-1); Delta^top is constant.
    for (std::size_t m = top; m-- > 0;) table[m] -= table[m + 1];
  }
  for (std::int64_t x = 1; x < first; ++x) {
    for (std::size_t m = 0; m < top; ++m) table[m] += table[m + 1];
  }
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(table[0]);
    for (std::size_t m = 0; m < top; ++m) table[m] += table[m + 1];
  }
  return out;
}

Polynomial<Rational> InterpolatingPolynomial::to_monomial() const {
  using RP = Polynomial<Rational>;
  const RP t{Rational(-1), Rational(1)};  // x - 1
  RP binom = RP::constant(Rational(1));
  RP acc;
  for (std::size_t m = 0; m < differences_.size(); ++m) {
    if (m > 0) binom = binom * (t - RP::constant(Rational(m - 1))) * (Rational(1) / Rational(m));
    acc += binom * differences_[m];
  }
  return acc;
}

namespace {

std::vector<Rational> seed_values(std::size_t n, std::size_t d) {
  const Rational lambda = Rational(static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d));
  // v[i] holds v_i; v_0 only ever appears with coefficient 0.
  std::vector<Rational> v(d + 2, Rational(0));
  v[1] = 1;
  for (std::size_t i = 0; i < d; ++i) {
    v[i + 2] = (lambda * v[i + 1] - Rational(i) * v[i]) / Rational(n - i);  // n - i >= 1
  }
  return {v.begin() + 1, v.end()};
}

}  // namespace

EigenPair eigenvector(std::size_t n, std::size_t d) {
  if (n == 0) throw std::invalid_argument("eigenvector: n must be positive");
  if (d > n) {
    throw std::invalid_argument("eigenvector: d = " + std::to_string(d) + " outside 0.." + std::to_string(n));
  }
  auto seed = seed_values(n, d);
  InterpolatingPolynomial poly(seed);
  const auto values = poly.values_from(1, n + 1);
  RationalVector vec(static_cast<Eigen::Index>(n + 1));
  for (std::size_t i = 0; i <= n; ++i) vec(static_cast<Eigen::Index>(i)) = values[i];
  const auto lambda = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(d);
  return EigenPair{n, d, lambda, std::move(seed), std::move(poly), std::move(vec)};
}

std::vector<EigenPair> eigenpairs(std::size_t n) {
  std::vector<EigenPair> out;
  out.reserve(n + 1);
  for (std::size_t d = 0; d <= n; ++d) out.push_back(eigenvector(n, d));
  return out;
}

std::vector<CheckedPair> checked_eigenpairs(std::size_t n) {
  std::vector<CheckedPair> out;
  out.reserve(n + 1);
  for (auto& pair : eigenpairs(n)) {
    const bool eigen_ok = verify_eigenpair(pair);
    const bool functional_ok = verify_functional_equation(pair);
    out.push_back({std::move(pair), eigen_ok, functional_ok});
  }
  return out;
}

bool verify_eigenpair(const EigenPair& pair) {
  const auto size = static_cast<Eigen::Index>(pair.n + 1);
  if (pair.vector.size() != size) return false;
  if (pair.vector.isZero()) return false;
  const RationalMatrix s = kac_matrix<Rational>(pair.n);
  const RationalVector image = s * pair.vector;
  const RationalVector scaled = pair.vector * Rational(pair.lambda);
  return image == scaled;
}

bool verify_functional_equation(const EigenPair& pair, std::size_t sample_count) {
  if (sample_count < pair.d + 1) {
    throw std::invalid_argument("verify_functional_equation: need at least d+1 = " + std::to_string(pair.d + 1) +
                                " samples");
  }
  const Rational n(pair.n);
  const Rational lambda(pair.lambda);
  const auto p = pair.poly.values_from(0, sample_count + 2);  // p[x] = p(x)
  for (std::size_t s = 0; s < sample_count; ++s) {
    const Rational x(s);
    if (x * p[s] + (n - x) * p[s + 2] != lambda * p[s + 1]) return false;
  }
  return true;
}

std::vector<Integer> integer_scaled(const RationalVector& v) {
  Integer denominator_lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    denominator_lcm = lcm(denominator_lcm, Integer(boost::multiprecision::denominator(v(i))));
  }
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  Integer common = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v(i) * Rational(denominator_lcm);
    out.push_back(Integer(boost::multiprecision::numerator(scaled)));
    common = gcd(common, out.back());
  }
  if (common == 0) return out;
  Integer sign = 1;
  for (const auto& x : out) {
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& x : out) x = x / common * sign;
  return out;
}

std::optional<int> reflection_parity(const RationalVector& v) {
  bool even = true, odd = true;
  const Eigen::Index size = v.size();
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto& mirror = v(size - 1 - i);
    even = even && v(i) == mirror;
    odd = odd && v(i) == -mirror;
  }
  if (even) return 1;
  if (odd) return -1;
  return std::nullopt;
}

CharPoly expanded_charpoly(std::size_t n) {
  if (n == 0) throw std::invalid_argument("expanded_charpoly: n must be positive");
  IntegerPolynomial product = IntegerPolynomial::monomial(n % 2 == 0 ? 1 : 0);
  for (std::size_t j = (n % 2 == 0) ? 2 : 1; j <= n; j += 2) {
    product = product * IntegerPolynomial{-Integer(j) * j, Integer(0), Integer(1)};
  }
  return CharPoly::from_dense(n, product);
}

}  // namespace kacspec
