#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace tamegraph {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Arithmetic backends for the analyses that run in either exact rational or
// double mode.  Everything is routed through these hooks so templated code
// never branches on the scalar type.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_rational(const Rational& r) { return r.template convert_to<double>(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_bigint(const BigInt& v) { return v.template convert_to<double>(); }
  static double to_double(double v) { return v; }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_rational(const Rational& r) { return r; }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_bigint(const BigInt& v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.template convert_to<double>(); }
};

// Shortest round-trip style formatting: fixed "%.17g" keeps report output
// byte-identical across runs.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline std::string format_scalar(double v) { return format_double(v); }

inline std::string format_scalar(const Rational& v) {
  const BigInt& num = boost::multiprecision::numerator(v);
  const BigInt& den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "p/q", integer, or decimal-fraction text ("0.25" -> 1/4).
Rational parse_rational(const std::string& text);

// log of a positive big integer via msb split; exact enough for growth rates.
inline double log_bigint(const BigInt& v) {
  if (v <= 0) throw std::domain_error("log of non-positive integer");
  unsigned bits = boost::multiprecision::msb(v);
  if (bits <= 900) return std::log(v.template convert_to<double>());
  BigInt scaled = v >> (bits - 64);
  return std::log(scaled.template convert_to<double>()) + static_cast<double>(bits - 64) * std::log(2.0);
}

}  // namespace tamegraph
