#pragma once

#include "g2/cayley.hpp"
#include "g2/endo.hpp"

namespace g2 {

template <class S>
S sigma1(const Endo7<S>& a) {
  return a.trace();
}

// (1/2) sum_{i != j} (a_ii a_jj - a_ij a_ji), the second elementary
// symmetric function of the eigenvalues
template <class S>
S sigma2(const Endo7<S>& a) {
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) {
      if (i == j) continue;
      acc += a(i, i) * a(j, j) - a(i, j) * a(j, i);
    }
  return acc * scalar_traits<S>::from_rational(rat(1, 2));
}

// The three cross-product contractions of a: sums over the orthonormal frame
// of <a(e_i) x a(e_j), e_i x e_j>, <a(e_i) x e_i, a(e_j) x e_j>, and
// <a(e_i) x e_j, a(e_j) x e_i>.
template <class S>
S inv_i0(const Endo7<S>& a) {
  std::array<Vec7<S>, DIM> col;
  for (int i = 0; i < DIM; ++i) col[i] = a.column(i);
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j)
      acc += dot(cross(col[i], col[j]), cross(Vec7<S>::basis(i), Vec7<S>::basis(j)));
  return acc;
}

template <class S>
S inv_i1(const Endo7<S>& a) {
  Vec7<S> w;
  for (int i = 0; i < DIM; ++i) w = w + cross(a.column(i), Vec7<S>::basis(i));
  return norm_sq(w);
}

template <class S>
S inv_i2(const Endo7<S>& a) {
  std::array<Vec7<S>, DIM> col;
  for (int i = 0; i < DIM; ++i) col[i] = a.column(i);
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j)
      acc += dot(cross(col[i], Vec7<S>::basis(j)), cross(col[j], Vec7<S>::basis(i)));
  return acc;
}

template <class S>
struct InvariantSet {
  S sigma1, sigma2, i0, i1, i2;
};

template <class S>
InvariantSet<S> invariants(const Endo7<S>& a) {
  return {sigma1(a), sigma2(a), inv_i0(a), inv_i1(a), inv_i2(a)};
}

}  // namespace g2
