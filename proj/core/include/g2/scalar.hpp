#pragma once

#include <charconv>
#include <cmath>
#include <string>

#include "g2/rational.hpp"

namespace g2 {

// The whole algebra layer is templated on the scalar: Rational for exact
// verification, double for the float mode.  The traits below are the only
// place the two cases differ.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational from_long(long n) { return Rational(n); }
  static Rational from_rational(const Rational& r) { return r; }
  static Rational abs(const Rational& x) { return ::abs(x); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double from_long(long n) { return static_cast<double>(n); }
  static double from_rational(const Rational& r) { return r.get_d(); }
  static double abs(double x) { return std::fabs(x); }
  static bool is_zero(double x) { return x == 0.0; }
  static std::string str(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, end);
  }
};

}  // namespace g2
