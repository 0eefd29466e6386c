#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mv {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p" and "p/q". Throws ConfigError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace mv
