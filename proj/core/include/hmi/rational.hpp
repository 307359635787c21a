#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hmi {

using BigInt = boost::multiprecision::cpp_int;
// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "7", "-3/4", "0.125", "2.5e-3". Decimal input is converted exactly
// (0.1 becomes 1/10, not the nearest double).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

BigInt factorial(unsigned n);

}  // namespace hmi
