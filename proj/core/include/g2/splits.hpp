#pragma once

#include "g2/cayley.hpp"

namespace g2 {

// Type decomposition of low-degree forms against phi.  The projections use
// that {*phi}, {e_i ^ phi} and {phi}, {e_i -| *phi} span the degree-1 and
// degree-7 pieces, with (e_i ^ phi, e_j ^ phi) = 4 delta_ij,
// (e_i -| *phi, e_j -| *phi) = 4 delta_ij, (e_i ^ *phi, e_j ^ *phi) = 3 delta_ij.

template <class S>
const std::array<Form<S>, DIM>& wedge_phi_forms() {
  static const std::array<Form<S>, DIM> t = [] {
    std::array<Form<S>, DIM> out;
    for (int i = 0; i < DIM; ++i)
      out[i] = wedge(monomial<S>({i}), cayley<S>().phi);
    return out;
  }();
  return t;
}

template <class S>
const std::array<Form<S>, DIM>& wedge_star_phi_forms() {
  static const std::array<Form<S>, DIM> t = [] {
    std::array<Form<S>, DIM> out;
    for (int i = 0; i < DIM; ++i)
      out[i] = wedge(monomial<S>({i}), cayley<S>().star_phi);
    return out;
  }();
  return t;
}

template <class S>
struct Split3 {
  Form<S> part1{3}, part7{3}, part27{3};
};

template <class S>
struct Split4 {
  Form<S> part1{4}, part7{4}, part27{4};
};

template <class S>
struct Split5 {
  Form<S> part7{5}, part14{5};
};

template <class S>
Split3<S> split_3form(const Form<S>& g) {
  if (g.degree != 3) throw std::invalid_argument("split_3form: need a 3-form");
  const auto& C = cayley<S>();
  Split3<S> s;
  s.part1 = C.phi * (form_inner(g, C.phi) * scalar_traits<S>::from_rational(rat(1, 7)));
  for (int i = 0; i < DIM; ++i)
    s.part7 += C.int_star_phi[i] *
               (form_inner(g, C.int_star_phi[i]) * scalar_traits<S>::from_rational(rat(1, 4)));
  s.part27 = g - s.part1 - s.part7;
  return s;
}

template <class S>
Split4<S> split_4form(const Form<S>& w) {
  if (w.degree != 4) throw std::invalid_argument("split_4form: need a 4-form");
  const auto& C = cayley<S>();
  Split4<S> s;
  s.part1 = C.star_phi * (form_inner(w, C.star_phi) * scalar_traits<S>::from_rational(rat(1, 7)));
  const auto& ep = wedge_phi_forms<S>();
  for (int i = 0; i < DIM; ++i)
    s.part7 += ep[i] * (form_inner(w, ep[i]) * scalar_traits<S>::from_rational(rat(1, 4)));
  s.part27 = w - s.part1 - s.part7;
  return s;
}

template <class S>
Split5<S> split_5form(const Form<S>& w) {
  if (w.degree != 5) throw std::invalid_argument("split_5form: need a 5-form");
  Split5<S> s;
  const auto& esp = wedge_star_phi_forms<S>();
  for (int i = 0; i < DIM; ++i)
    s.part7 += esp[i] * (form_inner(w, esp[i]) * scalar_traits<S>::from_rational(rat(1, 3)));
  s.part14 = w - s.part7;
  return s;
}

}  // namespace g2
