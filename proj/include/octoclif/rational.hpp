#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octoclif {

// Exact coefficient field. cpp_rational keeps numerator/denominator reduced
// with a positive denominator after every operation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct RationalParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

/// Parses `[-]digits[/digits]`. Whitespace and a zero denominator are rejected.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw RationalParseError("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num)};
  Integer d = den.empty() ? Integer(1) : Integer{std::string(den)};
  if (d == 0) throw RationalParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

/// Exact square root of a non-negative rational, if it has one.
inline bool exact_sqrt(const Rational& r, Rational& out) {
  if (r < 0) return false;
  const Integer n = boost::multiprecision::numerator(r);
  const Integer d = boost::multiprecision::denominator(r);
  const Integer sn = boost::multiprecision::sqrt(n);
  const Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  out = Rational(sn, sd);
  return true;
}

}  // namespace octoclif
