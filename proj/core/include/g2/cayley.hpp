#pragma once

#include "g2/endo.hpp"
#include "g2/forms.hpp"

namespace g2 {

// Integer skeleton of the standard G2 package, scalar-free.  phi is the
// associative calibration sum_{i in Z7} e_i* ^ e_{i+1}* ^ e_{i+3}*.
struct CayleyData {
  int phi[35];           // coefficients of phi over the 3-form basis
  int star_phi[35];      // coefficients of *phi over the 4-form basis
  int cross_k[DIM][DIM];  // e_i x e_j = cross_s[i][j] * e_{cross_k[i][j]}
  int cross_s[DIM][DIM];  // 0 when i == j
};

const CayleyData& cayley_data();

template <class S>
struct CayleyTables {
  Form<S> phi{3};
  Form<S> star_phi{4};
  Form<S> vol{7};
  std::array<Form<S>, DIM> int_phi;       // e_j -| phi
  std::array<Form<S>, DIM> int_star_phi;  // e_j -| *phi
};

template <class S>
const CayleyTables<S>& cayley() {
  static const CayleyTables<S> t = [] {
    CayleyTables<S> c;
    const CayleyData& d = cayley_data();
    for (int r = 0; r < 35; ++r) {
      c.phi.c[r] = scalar_traits<S>::from_long(d.phi[r]);
      c.star_phi.c[r] = scalar_traits<S>::from_long(d.star_phi[r]);
    }
    c.vol = vol_form<S>();
    for (int j = 0; j < DIM; ++j) {
      c.int_phi[j] = interior(j, c.phi);
      c.int_star_phi[j] = interior(j, c.star_phi);
    }
    return c;
  }();
  return t;
}

template <class S>
Vec7<S> cross(const Vec7<S>& u, const Vec7<S>& v) {
  const CayleyData& d = cayley_data();
  Vec7<S> r;
  for (int i = 0; i < DIM; ++i) {
    if (scalar_traits<S>::is_zero(u[i])) continue;
    for (int j = 0; j < DIM; ++j) {
      int s = d.cross_s[i][j];
      if (s == 0 || scalar_traits<S>::is_zero(v[j])) continue;
      S term = u[i] * v[j];
      if (s < 0) term = -term;
      r[d.cross_k[i][j]] += term;
    }
  }
  return r;
}

// The three index pairs (i+1,i+3), (i+4,i+5), (i+2,i+6) attached to i; the
// matrix positions where A_v carries v_i, and the support of the membership
// conditions below.
struct FamilyPair {
  int r, s;
};
inline std::array<FamilyPair, 3> family_pairs(int i) {
  auto w = [i](int p, int q) { return FamilyPair{(i + p) % 7, (i + q) % 7}; };
  return {w(1, 3), w(4, 5), w(2, 6)};
}

// A_v(u) = u x v
template <class S>
Endo7<S> a_v(const Vec7<S>& v) {
  Endo7<S> a;
  for (int j = 0; j < DIM; ++j) {
    Vec7<S> col = cross(Vec7<S>::basis(j), v);
    for (int i = 0; i < DIM; ++i) a(i, j) = col[i];
  }
  return a;
}

// L1 size of the violation of membership in g2 = ker(lambda^2 -> lambda^2_7):
// skew-symmetry plus, for each i, the vanishing of
// a_{i+1,i+3} + a_{i+4,i+5} + a_{i+2,i+6}.
template <class S>
S g2_defect(const Endo7<S>& a) {
  S r = l1(sym(a));
  for (int i = 0; i < DIM; ++i) {
    auto e = [&](int p, int q) -> const S& { return a((i + p) % 7, (i + q) % 7); };
    r += scalar_traits<S>::abs(e(1, 3) + e(4, 5) + e(2, 6));
  }
  return r;
}

// L1 size of the violation of membership in the orthogonal complement of g2
// inside the antisymmetric matrices: skew-symmetry plus equality of the three
// family entries a_{i+1,i+3} = a_{i+4,i+5} = a_{i+2,i+6} for each i.
template <class S>
S g2_perp_defect(const Endo7<S>& a) {
  S r = l1(sym(a));
  for (int i = 0; i < DIM; ++i) {
    auto e = [&](int p, int q) -> const S& { return a((i + p) % 7, (i + q) % 7); };
    r += scalar_traits<S>::abs(e(1, 3) - e(4, 5));
    r += scalar_traits<S>::abs(e(4, 5) - e(2, 6));
  }
  return r;
}

template <class S>
bool is_in_g2(const Endo7<S>& a, const S& tol = scalar_traits<S>::zero()) {
  return g2_defect(a) <= tol;
}

template <class S>
bool is_in_g2_perp(const Endo7<S>& a, const S& tol = scalar_traits<S>::zero()) {
  return g2_perp_defect(a) <= tol;
}

}  // namespace g2
