#pragma once

#include <array>

#include "g2/forms.hpp"

namespace g2 {

// Endomorphism of R^7 in the standard basis, row-major: (*this)(i,j) is the
// coefficient of e_i in the image of e_j.
template <class S>
struct Endo7 {
  std::array<S, DIM * DIM> m{};

  S& operator()(int i, int j) { return m[DIM * i + j]; }
  const S& operator()(int i, int j) const { return m[DIM * i + j]; }
  bool operator==(const Endo7& o) const { return m == o.m; }

  static Endo7 identity() {
    Endo7 a;
    for (int i = 0; i < DIM; ++i) a(i, i) = scalar_traits<S>::from_long(1);
    return a;
  }

  Vec7<S> apply(const Vec7<S>& x) const {
    Vec7<S> r;
    for (int i = 0; i < DIM; ++i) {
      S acc = scalar_traits<S>::zero();
      for (int j = 0; j < DIM; ++j) acc += (*this)(i, j) * x[j];
      r[i] = acc;
    }
    return r;
  }

  Vec7<S> column(int j) const {
    Vec7<S> r;
    for (int i = 0; i < DIM; ++i) r[i] = (*this)(i, j);
    return r;
  }

  Endo7 transpose() const {
    Endo7 r;
    for (int i = 0; i < DIM; ++i)
      for (int j = 0; j < DIM; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  S trace() const {
    S r = scalar_traits<S>::zero();
    for (int i = 0; i < DIM; ++i) r += (*this)(i, i);
    return r;
  }

  Endo7 operator+(const Endo7& o) const {
    Endo7 r;
    for (int i = 0; i < DIM * DIM; ++i) r.m[i] = m[i] + o.m[i];
    return r;
  }
  Endo7 operator-(const Endo7& o) const {
    Endo7 r;
    for (int i = 0; i < DIM * DIM; ++i) r.m[i] = m[i] - o.m[i];
    return r;
  }
  Endo7 operator-() const {
    Endo7 r;
    for (int i = 0; i < DIM * DIM; ++i) r.m[i] = -m[i];
    return r;
  }
  Endo7 operator*(const S& c) const {
    Endo7 r;
    for (int i = 0; i < DIM * DIM; ++i) r.m[i] = m[i] * c;
    return r;
  }
  Endo7& operator+=(const Endo7& o) {
    for (int i = 0; i < DIM * DIM; ++i) m[i] += o.m[i];
    return *this;
  }
  Endo7& operator-=(const Endo7& o) {
    for (int i = 0; i < DIM * DIM; ++i) m[i] -= o.m[i];
    return *this;
  }
};

template <class S>
Endo7<S> mat_mul(const Endo7<S>& a, const Endo7<S>& b) {
  Endo7<S> r;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) {
      S acc = scalar_traits<S>::zero();
      for (int k = 0; k < DIM; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

template <class S>
Endo7<S> sym(const Endo7<S>& a) {
  Endo7<S> r;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j)
      r(i, j) = (a(i, j) + a(j, i)) * scalar_traits<S>::from_rational(rat(1, 2));
  return r;
}

template <class S>
Endo7<S> skew(const Endo7<S>& a) {
  Endo7<S> r;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j)
      r(i, j) = (a(i, j) - a(j, i)) * scalar_traits<S>::from_rational(rat(1, 2));
  return r;
}

template <class S>
S endo_inner(const Endo7<S>& a, const Endo7<S>& b) {
  S r = scalar_traits<S>::zero();
  for (int i = 0; i < DIM * DIM; ++i) r += a.m[i] * b.m[i];
  return r;
}

template <class S>
S endo_norm_sq(const Endo7<S>& a) {
  return endo_inner(a, a);
}

template <class S>
S l1(const Endo7<S>& a) {
  S r = scalar_traits<S>::zero();
  for (const auto& x : a.m) r += scalar_traits<S>::abs(x);
  return r;
}

// b |-> b_flat with b_flat(x, y) = <x, b(y)>: the 2-form with coefficient
// b_ij on e_i* ^ e_j* for i < j (b is skew-symmetrized first)
template <class S>
Form<S> two_form_of_skew(const Endo7<S>& a) {
  Endo7<S> b = skew(a);
  Form<S> f(2);
  for (int i = 0; i < DIM; ++i)
    for (int j = i + 1; j < DIM; ++j) f.c[rank_of_mask(2, (1u << i) | (1u << j))] = b(i, j);
  return f;
}

template <class S>
Endo7<S> endo_of_two_form(const Form<S>& f) {
  if (f.degree != 2) throw std::invalid_argument("endo_of_two_form: need a 2-form");
  Endo7<S> a;
  for (int i = 0; i < DIM; ++i)
    for (int j = i + 1; j < DIM; ++j) {
      const S& c = f.c[rank_of_mask(2, (1u << i) | (1u << j))];
      a(i, j) = c;
      a(j, i) = -c;
    }
  return a;
}

// g a g^{-1} for the cyclic shift g: e_i -> e_{i+1 mod 7}
template <class S>
Endo7<S> shift_conj(const Endo7<S>& a) {
  Endo7<S> r;
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) r((i + 1) % 7, (j + 1) % 7) = a(i, j);
  return r;
}

}  // namespace g2
