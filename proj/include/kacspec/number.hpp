#pragma once

// Exact scalar types shared by every module, and the Eigen aliases built on them.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kacspec {

// Expression templates are disabled: Eigen needs plain value types as scalars.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;
using RationalVector = DenseVector<Rational>;

/// Raised when an oracle or brute-force routine is asked to run beyond its cap.
/// Distinct from std::invalid_argument, which signals a malformed request.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decimal string, e.g. "-12".
inline std::string to_decimal(const Integer& value) { return value.str(); }

/// "p/q" in lowest terms with positive q; integers print without "/1".
inline std::string to_fraction(const Rational& value) { return value.str(); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on q == 0.
Rational parse_rational(std::string_view text);

/// Binomial coefficient C(n, k) over the integers; 0 when k < 0 or k > n.
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace kacspec
