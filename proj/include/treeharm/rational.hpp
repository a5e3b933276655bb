#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "treeharm/errors.hpp"

namespace treeharm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Parses "p", "p/q" or a plain decimal like "-0.25" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(BigInt(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    BigInt den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(BigInt(digits), den);
  } catch (const std::runtime_error&) {
    throw DomainError("cannot parse rational literal '" + s + "'");
  }
}

inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw DomainError("isqrt of a negative value");
  return boost::multiprecision::sqrt(n);
}

// Exact square root when the argument is a perfect square of a rational.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt n = numerator_of(r), d = denominator_of(r);
  BigInt sn = isqrt_floor(n), sd = isqrt_floor(d);
  if (sn * sn == n && sd * sd == d) return Rational(sn, sd);
  return std::nullopt;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Rational pow_rational(const Rational& base, long long e) {
  if (e < 0) {
    if (base == 0) throw DomainError("zero cannot be raised to a negative power");
    return 1 / pow_rational(base, -e);
  }
  Rational r(1), b = base;
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

}  // namespace treeharm
