#pragma once

#include <cstdint>

#include "g2/endo.hpp"
#include "g2/invariants.hpp"
#include "g2/splits.hpp"

namespace g2 {

// j(gamma)_ij = *((e_i -| phi) ^ (e_j -| phi) ^ gamma) is linear in the
// 3-form gamma with integer matrix jt[i][j][K] over the monomial basis e_K*.
// The fingerprint is FNV-1a over the row-major decimal serialization
// "<value>;" and pins the table against regressions.
struct JTableData {
  int c[DIM][DIM][35];
  uint64_t fnv;
};

const JTableData& j_table();

template <class S>
struct MapTables {
  std::array<Form<S>, 49> k_forms;  // e_i* ^ (e_j -| *phi)
  std::array<Form<S>, 49> i_forms;  // e_i* ^ (e_j -| phi)
  std::array<Form<S>, 49> m_forms;  // *(e_i* ^ e_j*)
};

template <class S>
const MapTables<S>& map_tables() {
  static const MapTables<S> t = [] {
    MapTables<S> out;
    const auto& C = cayley<S>();
    for (int i = 0; i < DIM; ++i)
      for (int j = 0; j < DIM; ++j) {
        out.k_forms[DIM * i + j] = wedge(monomial<S>({i}), C.int_star_phi[j]);
        out.i_forms[DIM * i + j] = wedge(monomial<S>({i}), C.int_phi[j]);
        out.m_forms[DIM * i + j] = hodge(wedge(monomial<S>({i}), monomial<S>({j})));
      }
    return out;
  }();
  return t;
}

// k(a) = sum_ij a_ij e_i* ^ (e_j -| *phi); kernel contains the g2 part
template <class S>
Form<S> map_k(const Endo7<S>& a) {
  Form<S> r(4);
  const auto& t = map_tables<S>();
  for (int e = 0; e < DIM * DIM; ++e) {
    if (scalar_traits<S>::is_zero(a.m[e])) continue;
    r += t.k_forms[e] * a.m[e];
  }
  return r;
}

// m(a) = sum_ij a_ij *(e_i* ^ e_j*); kernel contains the symmetric part
template <class S>
Form<S> map_m(const Endo7<S>& a) {
  Form<S> r(5);
  const auto& t = map_tables<S>();
  for (int e = 0; e < DIM * DIM; ++e) {
    if (scalar_traits<S>::is_zero(a.m[e])) continue;
    r += t.m_forms[e] * a.m[e];
  }
  return r;
}

// i(a) = sum_ij a_ij e_i* ^ (e_j -| phi)
template <class S>
Form<S> map_i(const Endo7<S>& a) {
  Form<S> r(3);
  const auto& t = map_tables<S>();
  for (int e = 0; e < DIM * DIM; ++e) {
    if (scalar_traits<S>::is_zero(a.m[e])) continue;
    r += t.i_forms[e] * a.m[e];
  }
  return r;
}

template <class S>
Endo7<S> map_j(const Form<S>& g) {
  if (g.degree != 3) throw std::invalid_argument("map_j: need a 3-form");
  const JTableData& jt = j_table();
  Endo7<S> r;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) {
      S acc = scalar_traits<S>::zero();
      for (int K = 0; K < 35; ++K) {
        int c = jt.c[i][j][K];
        if (c == 0) continue;
        acc += scalar_traits<S>::from_long(c) * g.c[K];
      }
      r(i, j) = acc;
    }
  return r;
}

// Residuals of the composition identities on the domain where they hold:
// symmetric endomorphisms and 3-forms with no vector component.
//   j(i(a))   + 4a + 2 sigma1(a) Id     = 0
//   i(j(g))   + 4g + 2(g,phi) phi       = 0
//   j(*k(a))  - 4a + 4 sigma1(a) Id     = 0
//   k(j(g))   - 4*g + 4(g,phi) *phi     = 0
template <class S>
struct CompositionResiduals {
  Endo7<S> j_after_i;
  Form<S> i_after_j{3};
  Endo7<S> j_after_star_k;
  Form<S> k_after_j{4};
};

template <class S>
CompositionResiduals<S> composition_residuals(Endo7<S> a, Form<S> g, bool strict,
                                              const S& tol = scalar_traits<S>::zero()) {
  if (g.degree != 3) throw std::invalid_argument("composition_residuals: need a 3-form");
  S skew_size = l1(skew(a));
  if (skew_size > tol) {
    if (strict)
      throw std::domain_error(
          "composition identities hold on symmetric endomorphisms only; "
          "the input has a skew part");
    a = sym(a);
  }
  Split3<S> sp = split_3form(g);
  if (l1(sp.part7) > tol) {
    if (strict)
      throw std::domain_error(
          "composition identities hold on 3-forms with no vector component; "
          "the input has one");
    g -= sp.part7;
  }
  const auto& C = cayley<S>();
  const S four = scalar_traits<S>::from_long(4);
  S s1 = sigma1(a);
  S gphi = form_inner(g, C.phi);

  CompositionResiduals<S> out;
  out.j_after_i =
      map_j<S>(map_i(a)) + a * four + Endo7<S>::identity() * (s1 + s1);
  out.i_after_j = map_i(map_j<S>(g)) + g * four + C.phi * (gphi + gphi);
  out.j_after_star_k =
      map_j<S>(hodge(map_k(a))) - a * four + Endo7<S>::identity() * (four * s1);
  out.k_after_j = map_k(map_j<S>(g)) - hodge(g) * four + C.star_phi * (four * gphi);
  return out;
}

// k(a) + *i(a^T) = sigma1(a) *phi and *k(a) + i(a^T) = sigma1(a) phi on all
// of gl(7); returned as residuals
template <class S>
std::pair<Form<S>, Form<S>> bridge_residuals(const Endo7<S>& a) {
  const auto& C = cayley<S>();
  Endo7<S> at = a.transpose();
  S s1 = sigma1(a);
  Form<S> b1 = map_k(a) + hodge(map_i(at)) - C.star_phi * s1;
  Form<S> b2 = hodge(map_k(a)) + map_i(at) - C.phi * s1;
  return {b1, b2};
}

// *(x_flat ^ (y -| *phi)) + y_flat ^ (x -| phi) = <x,y> phi and its mirror
template <class S>
std::pair<Form<S>, Form<S>> vector_identity_residuals(const Vec7<S>& x, const Vec7<S>& y) {
  const auto& C = cayley<S>();
  S xy = dot(x, y);
  Form<S> r1 = hodge(wedge(flat(x), interior(y, C.star_phi))) +
               wedge(flat(y), interior(x, C.phi)) - C.phi * xy;
  Form<S> r2 = wedge(flat(x), interior(y, C.star_phi)) +
               hodge(wedge(flat(y), interior(x, C.phi))) - C.star_phi * xy;
  return {r1, r2};
}

}  // namespace g2
