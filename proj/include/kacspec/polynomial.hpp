#pragma once

#include "kacspec/number.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace kacspec {

/// Dense univariate polynomial over an exact ring, coefficients in ascending
/// powers. Always trimmed: the zero polynomial has no coefficients.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { trim(); }
  Polynomial(std::initializer_list<Scalar> ascending) : c_(ascending) { trim(); }

  static Polynomial constant(Scalar value) { return Polynomial(std::vector<Scalar>{std::move(value)}); }
  /// x^power
  static Polynomial monomial(std::size_t power, Scalar scale = Scalar(1)) {
    std::vector<Scalar> c(power + 1, Scalar(0));
    c[power] = std::move(scale);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of x^power; zero past the degree.
  Scalar operator[](std::size_t power) const { return power < c_.size() ? c_[power] : Scalar(0); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar leading_coefficient() const { return c_.empty() ? Scalar(0) : c_.back(); }

  template <typename Arg>
  Arg operator()(const Arg& x) const {
    Arg acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Arg(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) {
    for (auto& v : p.c_) v = -v;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Scalar& s) { return p *= s; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Scalar> out(lhs.c_.size() + rhs.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i) {
      if (lhs.c_[i] == 0) continue;
      for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntegerPolynomial = Polynomial<Integer>;

}  // namespace kacspec
