#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace luinv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

// Caller must check is_integral() first.
inline Integer to_integer(const Rational& q) { return boost::multiprecision::numerator(q); }

}  // namespace luinv
