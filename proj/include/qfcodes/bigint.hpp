#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace qfcodes {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }
inline BigInt ipow(std::uint64_t base, unsigned exp) { return boost::multiprecision::pow(BigInt(base), exp); }

/// base^exp for a possibly negative exponent, as an exact rational.
Rational rpow(std::uint64_t base, long exp);

/// Throws std::logic_error naming `what` unless the rational is an integer.
BigInt require_integer(const Rational& value, const char* what);

inline std::string to_string(const BigInt& v) { return v.str(); }
std::string to_string(const Rational& v);

/// Fits-in-64-bits conversion; throws std::overflow_error otherwise.
std::uint64_t to_u64(const BigInt& v);

}  // namespace qfcodes
