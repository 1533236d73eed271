#pragma once

#include <map>
#include <string>

#include "g2/decomp.hpp"
#include "g2/invariants.hpp"
#include "g2/rng.hpp"
#include "g2/splits.hpp"

namespace g2 {

// Pointwise model: an endomorphism T plays the full torsion tensor of a
// G2-structure, nabla phi its covariant derivative.  Everything below is the
// frame-constant shadow of the usual structure equations; d phi and d* phi
// are the alternations of nabla phi and nabla *phi.

template <class S>
using NablaPhi = std::array<Form<S>, DIM>;

// slot i: nabla_i phi = 3 sum_j T_ji (e_j -| *phi)
template <class S>
NablaPhi<S> nabla_phi(const Endo7<S>& t) {
  NablaPhi<S> n;
  const auto& C = cayley<S>();
  for (int i = 0; i < DIM; ++i) {
    Form<S> slot(3);
    for (int j = 0; j < DIM; ++j) {
      if (scalar_traits<S>::is_zero(t(j, i))) continue;
      slot += C.int_star_phi[j] * t(j, i);
    }
    n[i] = slot * scalar_traits<S>::from_long(3);
  }
  return n;
}

// <nabla phi, nabla phi> = sum_i <slot_i, slot_i> with the full tensor inner
// product on each 3-form slot; equals 216 |T|^2
template <class S>
S nabla_phi_inner(const NablaPhi<S>& n) {
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i) acc += tensor_inner(n[i], n[i]);
  return acc;
}

// T_ij = (1/12) (slot_j, e_i -| *phi)
template <class S>
Endo7<S> t_from_nabla_phi(const NablaPhi<S>& n) {
  const auto& C = cayley<S>();
  Endo7<S> t;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j)
      t(i, j) = form_inner(n[j], C.int_star_phi[i]) * scalar_traits<S>::from_rational(rat(1, 12));
  return t;
}

// xi(x, y) = y x T(x), the torsion 2-tensor with vector values
template <class S>
Vec7<S> xi_apply(const Endo7<S>& t, const Vec7<S>& x, const Vec7<S>& y) {
  return cross(y, t.apply(x));
}

// sum_ij |e_j x T(e_i)|^2 = 6 |T|^2
template <class S>
S xi_norm_sq(const Endo7<S>& t) {
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i) {
    Vec7<S> ti = t.apply(Vec7<S>::basis(i));
    for (int j = 0; j < DIM; ++j) acc += norm_sq(cross(Vec7<S>::basis(j), ti));
  }
  return acc;
}

// d phi of the model structure, expanded into five cyclic blocks; agrees
// with the alternation sum_i e_i* ^ nabla_i phi
template <class S>
Form<S> d_phi(const Endo7<S>& t) {
  Form<S> r(4);
  auto tt = [&](int a, int b) -> const S& { return t(a % 7, b % 7); };
  const S three = scalar_traits<S>::from_long(3);
  for (int i = 0; i < DIM; ++i) {
    S b1 = tt(i + 2, i + 2) + tt(i + 4, i + 4) + tt(i + 5, i + 5) + tt(i + 6, i + 6);
    add_monomial(r, {i + 2, i + 4, i + 5, i + 6}, S(-three * b1));
    S b2 = tt(i + 3, i + 1) + tt(i + 5, i + 4) + tt(i + 6, i + 2);
    add_monomial(r, {i, i + 1, i + 2, i + 4}, S(three * b2));
    S b3 = tt(i + 6, i + 2) - tt(i + 1, i + 3) - tt(i + 4, i + 5);
    add_monomial(r, {i, i + 2, i + 3, i + 5}, S(three * b3));
    S b4 = tt(i + 5, i + 4) - tt(i + 1, i + 3) - tt(i + 2, i + 6);
    add_monomial(r, {i, i + 3, i + 4, i + 6}, S(three * b4));
    S b5 = tt(i + 3, i + 1) - tt(i + 4, i + 5) - tt(i + 2, i + 6);
    add_monomial(r, {i, i + 5, i + 6, i + 1}, S(three * b5));
  }
  return r;
}

// d phi as the alternation of nabla phi
template <class S>
Form<S> d_phi_from_nabla(const NablaPhi<S>& n) {
  Form<S> r(4);
  for (int i = 0; i < DIM; ++i) r += wedge(monomial<S>({i}), n[i]);
  return r;
}

// d* phi = 3 sum_i sum_{(r,s) in families(i)} (T_rs - T_sr - p_i) *(e_r* ^ e_s*)
template <class S>
Form<S> d_star_phi(const Endo7<S>& t) {
  Form<S> r(5);
  Vec7<S> p = p_map(t);
  const S three = scalar_traits<S>::from_long(3);
  for (int i = 0; i < DIM; ++i)
    for (auto [rr, ss] : family_pairs(i)) {
      S coef = three * (t(rr, ss) - t(ss, rr) - p[i]);
      if (scalar_traits<S>::is_zero(coef)) continue;
      r += hodge(monomial<S>({rr, ss})) * coef;
    }
  return r;
}

// the four torsion forms: scalar tau0, 1-form tau1, 2-form tau2 (type 14),
// 3-form tau3 (type 27)
template <class S>
struct TauForms {
  S tau0 = scalar_traits<S>::zero();
  Form<S> tau1{1}, tau2{2}, tau3{3};
};

template <class S>
TauForms<S> tau_forms(const Endo7<S>& t) {
  TauForms<S> out;
  out.tau0 = t.trace() * scalar_traits<S>::from_rational(rat(12, 7));
  out.tau1 = flat(p_map(t)) * scalar_traits<S>::from_rational(rat(-1, 2));
  out.tau2 = two_form_of_skew(components(t).c2) * scalar_traits<S>::from_long(6);
  out.tau3 = hodge(split_4form(d_phi(t)).part27);
  return out;
}

// torsion recovered from a putative pair (d phi, d* phi); the round-trip
// residuals measure whether the pair is actually realized by one tensor
template <class S>
struct RecoverResult {
  Endo7<S> t;
  S residual_d_phi = scalar_traits<S>::zero();
  S residual_d_star_phi = scalar_traits<S>::zero();
  bool consistent = false;
};

template <class S>
RecoverResult<S> recover_torsion(const Form<S>& dphi, const Form<S>& dstarphi,
                                 const S& tol = scalar_traits<S>::zero()) {
  if (dphi.degree != 4 || dstarphi.degree != 5)
    throw std::invalid_argument("recover_torsion: need a 4-form and a 5-form");
  const auto& C = cayley<S>();
  RecoverResult<S> out;

  // diagonal piece: T1 = (1/84)(d phi, *phi) Id
  Endo7<S> t1 = Endo7<S>::identity() *
                (form_inner(dphi, C.star_phi) * scalar_traits<S>::from_rational(rat(1, 84)));

  // vector piece through the projected 1-form *(*d phi ^ phi) = 6 p(T)_flat
  Form<S> pd = hodge(wedge(hodge(dphi), C.phi));
  Endo7<S> t4 = a_v(sharp(pd)) * scalar_traits<S>::from_rational(rat(1, 36));

  // traceless symmetric piece from the symmetrized pairing with the k-basis
  Endo7<S> m;
  for (int r = 0; r < DIM; ++r)
    for (int s = 0; s < DIM; ++s) {
      Form<S> b = wedge(monomial<S>({r}), C.int_star_phi[s]) +
                  wedge(monomial<S>({s}), C.int_star_phi[r]);
      m(r, s) = form_inner(dphi, b) * scalar_traits<S>::from_rational(rat(1, 12));
    }
  Endo7<S> t3 =
      m - Endo7<S>::identity() * (m.trace() * scalar_traits<S>::from_rational(rat(1, 7)));

  // g2-type piece from d* phi after stripping its vector part
  Form<S> y = dstarphi + wedge(pd, C.star_phi) * scalar_traits<S>::from_rational(rat(1, 3));
  Endo7<S> t2;
  for (int r = 0; r < DIM; ++r)
    for (int s = r + 1; s < DIM; ++s) {
      S v = form_inner(y, hodge(monomial<S>({r, s}))) * scalar_traits<S>::from_rational(rat(1, 6));
      t2(r, s) = v;
      t2(s, r) = -v;
    }

  out.t = t1 + t2 + t3 + t4;
  out.residual_d_phi = l1(d_phi(out.t) - dphi);
  out.residual_d_star_phi = l1(d_star_phi(out.t) - dstarphi);
  out.consistent = out.residual_d_phi <= tol && out.residual_d_star_phi <= tol;
  return out;
}

// the 3-form T_skew = -(1/6)(d phi, *phi) phi + *d phi + 2 *(p_flat ^ phi)
// that carries the torsion whenever the tau2 component vanishes
template <class S>
Form<S> skew_torsion(const Endo7<S>& t) {
  const auto& C = cayley<S>();
  Form<S> dp = d_phi(t);
  Form<S> pflat = flat(p_map(t));
  return C.phi * (form_inner(dp, C.star_phi) * scalar_traits<S>::from_rational(rat(-1, 6))) +
         hodge(dp) + hodge(wedge(pflat, C.phi)) * scalar_traits<S>::from_long(2);
}

// Fernandez-Gray type: which of the four component norms are present
template <class S>
std::array<bool, 4> fg_class(const Endo7<S>& t, const S& tol = scalar_traits<S>::zero()) {
  auto n = component_norms_sq(t);
  std::array<bool, 4> in{};
  for (int k = 0; k < 4; ++k) in[k] = n[k] > tol;
  return in;
}

// ---- scalar-curvature comparator -------------------------------------------
//
// Each formula below is the algebraic (torsion-quadratic) part of a published
// scalar-curvature expression; the shared divergence term 6 div p(T) is
// dropped on every side.  The reference expansion in component norms is
// 54 n1 - 9 n2 - 9 n3 + 45 n4.  A formula is resolved against it by reading
// off its own coefficients on pure-class probes and checking span membership
// on mixed and random samples.

inline const std::array<Rational, 4>& reference_curvature_coeffs() {
  static const std::array<Rational, 4> c = {rat(54), rat(-9), rat(-9), rat(45)};
  return c;
}

template <class S>
S curvature_reference(const Endo7<S>& t) {
  auto n = component_norms_sq(t);
  S acc = scalar_traits<S>::zero();
  for (int k = 0; k < 4; ++k)
    acc += scalar_traits<S>::from_rational(reference_curvature_coeffs()[k]) * n[k];
  return acc;
}

template <class S>
S curvature_niedzialomski(const Endo7<S>& t) {
  return scalar_traits<S>::from_long(36) * sigma2(t) - scalar_traits<S>::from_long(9) * inv_i0(t);
}

template <class S>
S curvature_bryant(const Endo7<S>& t) {
  TauForms<S> tau = tau_forms(t);
  return scalar_traits<S>::from_rational(rat(21, 8)) * tau.tau0 * tau.tau0 +
         scalar_traits<S>::from_long(30) * form_norm_sq(tau.tau1) -
         scalar_traits<S>::from_rational(rat(1, 2)) * form_norm_sq(tau.tau2) -
         scalar_traits<S>::from_rational(rat(1, 2)) * form_norm_sq(tau.tau3);
}

template <class S>
S curvature_bhl(const Endo7<S>& t) {
  Components<S> c = components(t);
  std::array<S, 4> x{};
  const Endo7<S>* parts[4] = {&c.c1, &c.c2, &c.c3, &c.c4};
  for (int k = 0; k < 4; ++k)
    x[k] = nabla_phi_inner(nabla_phi(*parts[k])) * scalar_traits<S>::from_rational(rat(1, 36));
  return scalar_traits<S>::from_long(9) * x[0] -
         scalar_traits<S>::from_rational(rat(3, 2)) * x[1] -
         scalar_traits<S>::from_rational(rat(3, 2)) * x[2] +
         scalar_traits<S>::from_rational(rat(15, 2)) * x[3];
}

template <class S>
S curvature_fi(const Endo7<S>& t) {
  const auto& C = cayley<S>();
  S pairing = form_inner(d_phi(t), C.star_phi);
  return scalar_traits<S>::from_rational(rat(1, 18)) * pairing * pairing +
         scalar_traits<S>::from_long(4) * norm_sq(p_map(t)) -
         scalar_traits<S>::from_rational(rat(1, 2)) * form_norm_sq(skew_torsion(t));
}

template <class S>
struct FormulaReport {
  std::array<S, 4> coeffs{};    // expansion in (n1, n2, n3, n4)
  std::array<S, 4> residual{};  // coeffs minus the reference coefficients
  bool in_span = false;
  bool matches_reference = false;
};

// pure-class probes with nonzero norm in exactly one slot
template <class S>
std::array<Endo7<S>, 4> class_probes() {
  std::array<Endo7<S>, 4> p;
  p[0] = Endo7<S>::identity();  // n1 = 7
  const S one = scalar_traits<S>::from_long(1);
  p[1](1, 3) = one;  // in g2: family sums vanish; n2 = 4
  p[1](3, 1) = -one;
  p[1](4, 5) = -one;
  p[1](5, 4) = one;
  p[2](0, 0) = one;  // traceless symmetric; n3 = 2
  p[2](1, 1) = -one;
  p[3] = a_v(Vec7<S>::basis(0));  // n4 = 6
  return p;
}

template <class S>
std::map<std::string, FormulaReport<S>> compare_formulas(
    const Endo7<S>& input, uint64_t seed, const S& tol = scalar_traits<S>::zero()) {
  std::map<std::string, FormulaReport<S>> out;
  std::array<Endo7<S>, 4> probes = class_probes<S>();

  std::vector<Endo7<S>> span_checks;
  Endo7<S> mixed;
  for (const auto& p : probes) mixed += p;
  span_checks.push_back(mixed);
  Sampler rng(seed);
  for (int k = 0; k < 5; ++k) span_checks.push_back(rng.endo<S>());
  span_checks.push_back(input);

  using Fn = S (*)(const Endo7<S>&);
  const std::pair<const char*, Fn> formulas[] = {
      {"niedzialomski", &curvature_niedzialomski<S>},
      {"bryant", &curvature_bryant<S>},
      {"bhl", &curvature_bhl<S>},
      {"fi", &curvature_fi<S>},
  };

  for (auto [name, f] : formulas) {
    FormulaReport<S> rep;
    for (int k = 0; k < 4; ++k) {
      S nk = component_norms_sq(probes[k])[k];
      rep.coeffs[k] = f(probes[k]) / nk;
      rep.residual[k] =
          rep.coeffs[k] - scalar_traits<S>::from_rational(reference_curvature_coeffs()[k]);
    }
    rep.in_span = true;
    for (const auto& a : span_checks) {
      auto n = component_norms_sq(a);
      S expect = scalar_traits<S>::zero();
      for (int k = 0; k < 4; ++k) expect += rep.coeffs[k] * n[k];
      S lhs = f(a);
      S scale = scalar_traits<S>::abs(lhs) + scalar_traits<S>::abs(expect) +
                scalar_traits<S>::from_long(1);
      if (scalar_traits<S>::abs(lhs - expect) > tol * scale) rep.in_span = false;
    }
    rep.matches_reference = rep.in_span;
    for (int k = 0; k < 4; ++k)
      if (scalar_traits<S>::abs(rep.residual[k]) > tol) rep.matches_reference = false;
    out.emplace(name, std::move(rep));
  }
  return out;
}

}  // namespace g2
