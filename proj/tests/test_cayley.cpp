#include <doctest.h>

#include "g2/cayley.hpp"
#include "g2/rng.hpp"

using namespace g2;
using R = Rational;

TEST_CASE("phi and *phi have the standard coefficient displays") {
  const auto& C = cayley<R>();
  Form<R> phi(3);
  for (int i = 0; i < 7; ++i) phi += monomial<R>({i, (i + 1) % 7, (i + 3) % 7});
  CHECK(C.phi == phi);

  Form<R> sp(4);
  for (int i = 0; i < 7; ++i)
    sp += monomial<R>({(i + 2) % 7, (i + 4) % 7, (i + 5) % 7, (i + 6) % 7});
  CHECK(C.star_phi == sp * R(-1));
  CHECK(C.star_phi == hodge(C.phi));

  CHECK(form_inner(C.phi, C.phi) == 7);
  CHECK(tensor_inner(C.phi, C.phi) == 42);
  CHECK(wedge(C.phi, C.star_phi) == C.vol * R(7));
}

TEST_CASE("cross product table on the cyclic triples") {
  Vec7<R> e[7];
  for (int i = 0; i < 7; ++i) e[i] = Vec7<R>::basis(i);
  for (int i = 0; i < 7; ++i) {
    int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
    CHECK(cross(e[a], e[b]) == e[c]);
    CHECK(cross(e[c], e[a]) == e[b]);
    CHECK(cross(e[b], e[c]) == e[a]);
    CHECK(cross(e[b], e[a]) == e[c] * R(-1));
    CHECK(cross(e[a], e[a]) == Vec7<R>{});
  }
}

TEST_CASE("cross product is phi with an index raised") {
  Sampler rng(101);
  for (int s = 0; s < 20; ++s) {
    auto u = rng.vec<R>(), v = rng.vec<R>();
    auto w = cross(u, v);
    for (int k = 0; k < 7; ++k)
      CHECK(w[k] == eval(cayley<R>().phi, {u, v, Vec7<R>::basis(k)}));
  }
}

TEST_CASE("double and triple cross product expansions") {
  Sampler rng(102);
  for (int s = 0; s < 20; ++s) {
    auto u = rng.vec<R>(), v = rng.vec<R>(), w = rng.vec<R>();
    // u x (u x v) = <u,v> u - |u|^2 v
    CHECK(cross(u, cross(u, v)) == u * dot(u, v) - v * norm_sq(u));
    // u x (v x w) = -v x (u x w) + <v,w> u + <w,u> v - 2 <u,v> w
    auto lhs = cross(u, cross(v, w));
    auto rhs = cross(v, cross(u, w)) * R(-1) + u * dot(v, w) + v * dot(w, u) -
               w * (R(2) * dot(u, v));
    CHECK(lhs == rhs);
    // |u x v|^2 = |u|^2 |v|^2 - <u,v>^2
    auto d = dot(u, v);
    CHECK(norm_sq(cross(u, v)) == norm_sq(u) * norm_sq(v) - d * d);
  }
}

TEST_CASE("A_v is infinitesimal cross multiplication") {
  Sampler rng(103);
  for (int s = 0; s < 10; ++s) {
    auto v = rng.vec<R>(), u = rng.vec<R>();
    auto A = a_v(v);
    CHECK(A.apply(u) == cross(u, v));
    // its 2-form is v -| phi
    CHECK(two_form_of_skew(A) == interior(v, cayley<R>().phi));
    CHECK(endo_norm_sq(A) == R(6) * norm_sq(v));
  }
}

TEST_CASE("frame contractions of phi and *phi") {
  const auto& C = cayley<R>();
  // e0 -| phi = e13 + e45 + e26
  Form<R> want = monomial<R>({1, 3}) + monomial<R>({4, 5}) + monomial<R>({2, 6});
  CHECK(C.int_phi[0] == want);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      R d3 = (i == j) ? R(3) : R(0);
      R d4 = (i == j) ? R(4) : R(0);
      CHECK(form_inner(C.int_phi[i], C.int_phi[j]) == d3);
      CHECK(form_inner(C.int_star_phi[i], C.int_star_phi[j]) == d4);
      CHECK(form_inner(wedge(monomial<R>({i}), C.phi), wedge(monomial<R>({j}), C.phi)) == d4);
      CHECK(form_inner(wedge(monomial<R>({i}), C.star_phi),
                       wedge(monomial<R>({j}), C.star_phi)) == d3);
    }
}

TEST_CASE("two-form type constants under wedging with phi") {
  // beta in Lambda^2_7: phi ^ beta = -2 *beta;  beta in Lambda^2_14: phi ^ beta = *beta
  auto b7 = two_form_of_skew(a_v(Vec7<R>::basis(2)));
  CHECK(wedge(cayley<R>().phi, b7) == hodge(b7) * R(-2));

  Endo7<R> g{};  // E13 - E31 - E45 + E54 satisfies the g2 sum conditions
  g(1, 3) = 1;
  g(3, 1) = -1;
  g(4, 5) = -1;
  g(5, 4) = 1;
  REQUIRE(is_in_g2(g));
  auto b14 = two_form_of_skew(g);
  CHECK(wedge(cayley<R>().phi, b14) == hodge(b14));
}

TEST_CASE("membership tests pick out g2 and its complement") {
  Endo7<R> g{};
  g(1, 3) = 1;
  g(3, 1) = -1;
  g(4, 5) = -1;
  g(5, 4) = 1;
  CHECK(is_in_g2(g));
  CHECK_FALSE(is_in_g2_perp(g));

  auto A = a_v(Vec7<R>::basis(0));
  CHECK(is_in_g2_perp(A));
  CHECK_FALSE(is_in_g2(A));

  // g2 elements act as derivations of the cross product
  Sampler rng(104);
  for (int s = 0; s < 10; ++s) {
    auto u = rng.vec<R>(), v = rng.vec<R>();
    CHECK(g.apply(cross(u, v)) == cross(g.apply(u), v) + cross(u, g.apply(v)));
  }
}

TEST_CASE("the index shift i -> i+1 preserves phi and *phi") {
  const auto& C = cayley<R>();
  CHECK(shift_form(C.phi) == C.phi);
  CHECK(shift_form(C.star_phi) == C.star_phi);
  Sampler rng(105);
  auto u = rng.vec<R>(), v = rng.vec<R>();
  CHECK(shift_vec(cross(u, v)) == cross(shift_vec(u), shift_vec(v)));
}

TEST_CASE("contraction identities tying phi to *phi") {
  Sampler rng(106);
  const auto& C = cayley<R>();
  for (int s = 0; s < 10; ++s) {
    auto x = rng.vec<R>();
    CHECK(wedge(flat(x), C.star_phi) == hodge(interior(x, C.phi)));
    CHECK(hodge(wedge(flat(x), C.phi)) == interior(x, C.star_phi) * R(-1));
    CHECK(hodge(interior(x, C.star_phi)) == wedge(flat(x), C.phi) * R(-1));
    CHECK(wedge(interior(x, C.phi), C.star_phi) == hodge(flat(x)) * R(3));
  }
}
