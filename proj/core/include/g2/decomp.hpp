#pragma once

#include <array>

#include "g2/cayley.hpp"
#include "g2/endo.hpp"
#include "g2/linalg.hpp"

namespace g2 {

// p(a)_i = sum over the family pairs (r,s) of i of (a_rs - a_sr); the
// gl(7) -> R^7 projection onto the infinitesimal cross products, normalized
// so that p(A_v) = 6v.
template <class S>
Vec7<S> p_map(const Endo7<S>& a) {
  Vec7<S> p;
  for (int i = 0; i < DIM; ++i) {
    S acc = scalar_traits<S>::zero();
    for (auto [r, s] : family_pairs(i)) acc += a(r, s) - a(s, r);
    p[i] = acc;
  }
  return p;
}

// a = a1 + a2 + a3 + a4 along gl(7) = R Id + g2 + S0 + R^7, the pointwise
// shape of Lambda^2 = Lambda^2_14 + Lambda^2_7 glued with sym = R g + S0.
template <class S>
struct Components {
  Endo7<S> c1, c2, c3, c4;
};

template <class S>
Components<S> components(const Endo7<S>& a) {
  Components<S> out;
  S tr7 = a.trace() * scalar_traits<S>::from_rational(rat(1, 7));
  out.c1 = Endo7<S>::identity() * tr7;
  out.c3 = sym(a) - out.c1;
  Vec7<S> p = p_map(a);
  out.c4 = a_v(p) * scalar_traits<S>::from_rational(rat(1, 6));
  S sixth = scalar_traits<S>::from_rational(rat(1, 6));
  for (int i = 0; i < DIM; ++i)
    for (auto [r, s] : family_pairs(i)) {
      S coef = (scalar_traits<S>::from_long(3) * (a(r, s) - a(s, r)) - p[i]) * sixth;
      out.c2(r, s) = coef;
      out.c2(s, r) = -coef;
    }
  return out;
}

// {n1, n2, n3, n4} = the squared norms of the four components, in closed
// form straight from the entries of a.
template <class S>
std::array<S, 4> component_norms_sq(const Endo7<S>& a) {
  S tr = a.trace();
  S n1 = tr * tr * scalar_traits<S>::from_rational(rat(1, 7));
  Vec7<S> p = p_map(a);
  S psq = norm_sq(p);
  S n4 = psq * scalar_traits<S>::from_rational(rat(1, 6));
  S half = scalar_traits<S>::from_rational(rat(1, 2));
  S diag = scalar_traits<S>::zero();
  S tr7 = tr * scalar_traits<S>::from_rational(rat(1, 7));
  for (int i = 0; i < DIM; ++i) {
    S d = a(i, i) - tr7;
    diag += d * d;
  }
  S sym_off = scalar_traits<S>::zero();
  S skew_off = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i)
    for (auto [r, s] : family_pairs(i)) {  // the 21 pairs cover each r < s once
      S sp = a(r, s) + a(s, r);
      S sm = a(r, s) - a(s, r);
      sym_off += sp * sp;
      skew_off += sm * sm;
    }
  S n3 = diag + half * sym_off;
  S n2 = half * skew_off - n4;
  return {n1, n2, n3, n4};
}

// Independent route: orthogonal projectors assembled from explicit bases of
// the four summands (dims 1, 14, 27, 7) by exact Gram inversion.
std::array<int, 4> oracle_basis_dims();
const std::array<std::vector<Rational>, 4>& oracle_projectors();  // 49x49 row-major

template <class S>
Endo7<S> oracle_project(const Endo7<S>& a, int slot) {
  static const std::array<std::vector<S>, 4> ps = [] {
    std::array<std::vector<S>, 4> out;
    const auto& exact = oracle_projectors();
    for (int k = 0; k < 4; ++k) {
      out[k].reserve(exact[k].size());
      for (const Rational& r : exact[k]) out[k].push_back(scalar_traits<S>::from_rational(r));
    }
    return out;
  }();
  const std::vector<S>& p = ps.at(slot);
  Endo7<S> r;
  for (int i = 0; i < DIM * DIM; ++i) {
    S acc = scalar_traits<S>::zero();
    for (int j = 0; j < DIM * DIM; ++j) acc += p[49 * i + j] * a.m[j];
    r.m[i] = acc;
  }
  return r;
}

}  // namespace g2
