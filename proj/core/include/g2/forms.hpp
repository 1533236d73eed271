#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "g2/combinatorics.hpp"
#include "g2/scalar.hpp"

namespace g2 {

template <class S>
struct Vec7 {
  std::array<S, DIM> v{};

  S& operator[](int i) { return v[i]; }
  const S& operator[](int i) const { return v[i]; }

  static Vec7 basis(int i) {
    Vec7 e;
    e.v[i] = scalar_traits<S>::from_long(1);
    return e;
  }

  Vec7 operator+(const Vec7& o) const {
    Vec7 r;
    for (int i = 0; i < DIM; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  Vec7 operator-(const Vec7& o) const {
    Vec7 r;
    for (int i = 0; i < DIM; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
  Vec7 operator-() const {
    Vec7 r;
    for (int i = 0; i < DIM; ++i) r.v[i] = -v[i];
    return r;
  }
  Vec7 operator*(const S& c) const {
    Vec7 r;
    for (int i = 0; i < DIM; ++i) r.v[i] = v[i] * c;
    return r;
  }
  bool operator==(const Vec7& o) const { return v == o.v; }
};

template <class S>
S dot(const Vec7<S>& a, const Vec7<S>& b) {
  S r = scalar_traits<S>::zero();
  for (int i = 0; i < DIM; ++i) r += a.v[i] * b.v[i];
  return r;
}

template <class S>
S norm_sq(const Vec7<S>& a) {
  return dot(a, a);
}

// Exterior form of fixed degree with dense coefficients over the lex-ordered
// basis of increasing tuples.  Degrees above 7 are representable (they are
// identically zero, with an empty coefficient vector) so that wedge products
// can overflow gracefully.
template <class S>
struct Form {
  int degree = 0;
  std::vector<S> c;

  Form() : degree(0), c(1) {}
  explicit Form(int k) : degree(k), c(static_cast<size_t>(binom(DIM, k))) {
    if (k < 0) throw std::invalid_argument("Form: negative degree");
  }

  S& operator[](int rank) { return c[rank]; }
  const S& operator[](int rank) const { return c[rank]; }

  bool operator==(const Form& o) const { return degree == o.degree && c == o.c; }

  Form operator+(const Form& o) const {
    require_same_degree(o, "+");
    Form r(degree);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  Form operator-(const Form& o) const {
    require_same_degree(o, "-");
    Form r(degree);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  Form operator-() const {
    Form r(degree);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
  }
  Form operator*(const S& s) const {
    Form r(degree);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] * s;
    return r;
  }
  Form& operator+=(const Form& o) {
    require_same_degree(o, "+=");
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Form& operator-=(const Form& o) {
    require_same_degree(o, "-=");
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }

  void require_same_degree(const Form& o, const char* op) const {
    if (degree != o.degree)
      throw std::invalid_argument(std::string("form degrees differ in ") + op);
  }
};

// coeff * e_{idx[0]}* ^ ... ^ e_{idx[k-1]}*, indices mod 7, any order;
// adds nothing when an index repeats
template <class S>
void add_monomial(Form<S>& f, std::initializer_list<int> idx, const S& coeff) {
  std::vector<int> seq(idx);
  int sgn = sequence_sign(seq);
  if (sgn == 0) return;
  unsigned mask = 0;
  for (int i : seq) mask |= 1u << (((i % 7) + 7) % 7);
  S term = coeff;
  if (sgn < 0) term = -term;
  f.c[rank_of_mask(f.degree, mask)] += term;
}

template <class S>
Form<S> monomial(std::initializer_list<int> idx, long coeff = 1) {
  Form<S> f(static_cast<int>(idx.size()));
  add_monomial(f, idx, scalar_traits<S>::from_long(coeff));
  return f;
}

template <class S>
Form<S> vol_form() {
  return monomial<S>({0, 1, 2, 3, 4, 5, 6});
}

template <class S>
Form<S> wedge(const Form<S>& a, const Form<S>& b) {
  Form<S> r(a.degree + b.degree);
  if (r.degree > DIM) return r;  // identically zero
  const auto& ma = masks_of_degree(a.degree);
  const auto& mb = masks_of_degree(b.degree);
  for (size_t ia = 0; ia < ma.size(); ++ia) {
    if (scalar_traits<S>::is_zero(a.c[ia])) continue;
    for (size_t ib = 0; ib < mb.size(); ++ib) {
      int sgn = wedge_sign(ma[ia], mb[ib]);
      if (sgn == 0 || scalar_traits<S>::is_zero(b.c[ib])) continue;
      S term = a.c[ia] * b.c[ib];
      if (sgn < 0) term = -term;
      r.c[rank_of_mask(r.degree, ma[ia] | mb[ib])] += term;
    }
  }
  return r;
}

template <class S>
Form<S> hodge(const Form<S>& a) {
  if (a.degree > DIM) throw std::invalid_argument("hodge: degree exceeds 7");
  Form<S> r(DIM - a.degree);
  const auto& ma = masks_of_degree(a.degree);
  for (size_t i = 0; i < ma.size(); ++i) {
    S term = a.c[i];
    if (complement_sign(ma[i]) < 0) term = -term;
    r.c[rank_of_mask(r.degree, ~ma[i] & 0x7Fu)] = term;
  }
  return r;
}

// e_j -| a
template <class S>
Form<S> interior(int j, const Form<S>& a) {
  if (a.degree == 0) throw std::invalid_argument("cannot contract a scalar");
  if (a.degree > DIM) throw std::invalid_argument("interior: degree exceeds 7");
  Form<S> r(a.degree - 1);
  const auto& ma = masks_of_degree(a.degree);
  for (size_t i = 0; i < ma.size(); ++i) {
    if (!(ma[i] & (1u << j))) continue;
    S term = a.c[i];
    if (interior_sign(ma[i], j) < 0) term = -term;
    r.c[rank_of_mask(r.degree, ma[i] & ~(1u << j))] = term;
  }
  return r;
}

// x -| a
template <class S>
Form<S> interior(const Vec7<S>& x, const Form<S>& a) {
  if (a.degree == 0) throw std::invalid_argument("cannot contract a scalar");
  Form<S> r(a.degree - 1);
  for (int j = 0; j < DIM; ++j) {
    if (scalar_traits<S>::is_zero(x[j])) continue;
    r += interior(j, a) * x[j];
  }
  return r;
}

// alpha(v_1, ..., v_k) by iterated contraction, v_1 first; equals the
// determinant of the slot-evaluation matrix on each basis monomial
template <class S>
S eval(const Form<S>& a, std::span<const Vec7<S>> vs) {
  if (static_cast<int>(vs.size()) != a.degree)
    throw std::invalid_argument("eval: argument count must match degree");
  Form<S> cur = a;
  for (const auto& v : vs) cur = interior(v, cur);
  return cur.c[0];
}

template <class S>
S eval(const Form<S>& a, std::initializer_list<Vec7<S>> vs) {
  std::vector<Vec7<S>> v(vs);
  return eval(a, std::span<const Vec7<S>>(v));
}

// (alpha, beta): coefficient-wise over the orthonormal monomial basis
template <class S>
S form_inner(const Form<S>& a, const Form<S>& b) {
  a.require_same_degree(b, "form_inner");
  S r = scalar_traits<S>::zero();
  for (size_t i = 0; i < a.c.size(); ++i) r += a.c[i] * b.c[i];
  return r;
}

// <alpha, beta> = k! (alpha, beta), the full tensor contraction
template <class S>
S tensor_inner(const Form<S>& a, const Form<S>& b) {
  S r = form_inner(a, b);
  long f = 1;
  for (int i = 2; i <= a.degree; ++i) f *= i;
  return r * scalar_traits<S>::from_long(f);
}

template <class S>
S form_norm_sq(const Form<S>& a) {
  return form_inner(a, a);
}

// Sum of |coefficient|; the residual size used all over the test layer.
template <class S>
S l1(const Form<S>& a) {
  S r = scalar_traits<S>::zero();
  for (const auto& x : a.c) r += scalar_traits<S>::abs(x);
  return r;
}

template <class S>
S l1(const Vec7<S>& a) {
  S r = scalar_traits<S>::zero();
  for (const auto& x : a.v) r += scalar_traits<S>::abs(x);
  return r;
}

template <class S>
Form<S> flat(const Vec7<S>& x) {
  Form<S> f(1);
  for (int i = 0; i < DIM; ++i) f.c[i] = x[i];
  return f;
}

template <class S>
Vec7<S> sharp(const Form<S>& a) {
  if (a.degree != 1) throw std::invalid_argument("sharp: need a 1-form");
  Vec7<S> x;
  for (int i = 0; i < DIM; ++i) x[i] = a.c[i];
  return x;
}

// pullback along e_i -> e_{i+1 mod 7} (the cyclic symmetry used by the
// equivariance checks)
template <class S>
Form<S> shift_form(const Form<S>& a) {
  if (a.degree > DIM) throw std::invalid_argument("shift_form: degree exceeds 7");
  Form<S> r(a.degree);
  const auto& ma = masks_of_degree(a.degree);
  for (size_t i = 0; i < ma.size(); ++i) {
    std::vector<int> seq;
    for (int b = 0; b < DIM; ++b)
      if (ma[i] & (1u << b)) seq.push_back(b + 1);
    int sgn = sequence_sign(seq);
    unsigned mask = 0;
    for (int b : seq) mask |= 1u << (b % 7);
    S term = a.c[i];
    if (sgn < 0) term = -term;
    r.c[rank_of_mask(r.degree, mask)] = term;
  }
  return r;
}

template <class S>
Vec7<S> shift_vec(const Vec7<S>& x) {
  Vec7<S> r;
  for (int i = 0; i < DIM; ++i) r[(i + 1) % 7] = x[i];
  return r;
}

}  // namespace g2
