#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tailrate {

using BigInt = boost::multiprecision::cpp_int;
// Canonical reduced form with positive denominator is maintained by the type.
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den", also for integers ("3/1").
std::string format_rational(const Rational& x);
// "3" for integers, "7/3" otherwise. Used for human-facing branch names.
std::string format_rational_compact(const Rational& x);
// Accepts "num/den" or a bare integer.
Rational parse_rational(std::string_view text);

double to_double(const Rational& x);
long double to_long_double(const Rational& x);

}  // namespace tailrate
