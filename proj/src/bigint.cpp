#include "qfcodes/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace qfcodes {

Rational rpow(std::uint64_t base, long exp) {
  if (exp >= 0) return Rational(ipow(base, unsigned(exp)));
  return Rational(BigInt(1), ipow(base, unsigned(-exp)));
}

BigInt require_integer(const Rational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error(std::string(what) + " is not an integer: " + to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

std::string to_string(const Rational& v) {
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

std::uint64_t to_u64(const BigInt& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

}  // namespace qfcodes
