#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace toledo {

// All predicates in this library are decided over exact rationals.
// Floating point appears only in display strings.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Lowest-terms "p/q" rendering ("0/1" for zero, "-1/11", ...).
std::string fraction_string(const Rational& q);

/// Fixed-point decimal rendering, display only; never used in comparisons.
std::string decimal_string(const Rational& q, int digits = 6);

/// Parse "p/q" or "p".
Rational parse_rational(const std::string& text);

}  // namespace toledo
