// Exact rational scalar used by all basis algebra.
//
// Backed by boost::multiprecision::cpp_rational: arbitrary-precision
// numerator/denominator kept in canonical reduced form (gcd 1, positive
// denominator) by the library. Conversions from double are exact.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pathbound {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_from_double(double d) { return Rational(d); }

inline Rational rational(std::int64_t num, std::int64_t den) {
    return Rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace pathbound
