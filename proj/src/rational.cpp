#include "mv/rational.hpp"

#include <cctype>

#include "mv/errors.hpp"

namespace mv {

std::string to_string(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  if (!is_integral(q)) {
    out += '/';
    out += boost::multiprecision::denominator(q).str();
  }
  return out;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw ConfigError("not a rational literal: '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num));
  Integer d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw ConfigError("zero denominator: '" + std::string(text) + "'");
  return Rational(n, d);
}

}  // namespace mv
