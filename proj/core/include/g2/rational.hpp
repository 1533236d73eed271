#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace g2 {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Strict "p" or "p/q" with decimal integers; canonicalized on return.
inline Rational parse_rational(const std::string& s) {
  auto fail = [&] { throw std::invalid_argument("not a rational literal: '" + s + "'"); };
  size_t slash = s.find('/');
  auto digits = [&](size_t from, size_t to, bool sign_ok) {
    if (from >= to) fail();
    size_t i = from;
    if (sign_ok && s[i] == '-') ++i;
    if (i >= to) fail();
    for (; i < to; ++i)
      if (s[i] < '0' || s[i] > '9') fail();
  };
  digits(0, slash == std::string::npos ? s.size() : slash, true);
  if (slash != std::string::npos) digits(slash + 1, s.size(), false);
  Rational r;
  if (r.set_str(s, 10) != 0) fail();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace g2
