#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace seshadri {

// Expression templates are switched off so that the scalar plays well with
// Eigen's own expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RationalVector = Vector<Rational>;

/// Input that violates a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A postcondition that should hold by construction failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Throws InvariantError unless q is an integer fitting in 64 bits.
std::int64_t to_int64(const Rational& q);

/// "3/2", "-1", "0".
std::string to_string(const Rational& q);

/// Parses "p", "p/q" (q > 0).
Rational parse_rational(std::string_view text);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace seshadri
