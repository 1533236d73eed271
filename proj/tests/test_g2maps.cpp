#include <doctest.h>

#include <stdexcept>

#include "g2/g2maps.hpp"
#include "g2/rng.hpp"
#include "g2/torsion.hpp"
#include "test_support.hpp"

using namespace g2;
using R = Rational;

TEST_CASE("j table fingerprint is pinned") {
  CHECK(j_table().fnv == 4977698385037553937ULL);
}

TEST_CASE("spot values of the four maps") {
  const auto& C = cayley<R>();
  auto id = Endo7<R>::identity();
  CHECK(map_k(id) == C.star_phi * R(4));
  CHECK(map_i(id) == C.phi * R(3));
  CHECK(map_m(id) == Form<R>(5));
  CHECK(map_j<R>(C.phi) == id * R(-6));
}

TEST_CASE("kernels and images") {
  Sampler rng(401);
  auto a = rng.endo<R>();
  auto c = components(a);
  CHECK(map_k(c.c2) == Form<R>(4));  // k kills the g2 part
  CHECK(map_m(sym(a)) == Form<R>(5));
  CHECK(map_m(a) == hodge(two_form_of_skew(a)) * R(2));

  auto g = rng.form<R>(3);
  auto J = map_j<R>(g);
  CHECK(J.transpose() == J);
  CHECK(J.trace() == R(-6) * form_inner(g, cayley<R>().phi));
  CHECK(form_inner(map_i(sym(a)), cayley<R>().phi) == R(3) * sigma1(a));
  CHECK_THROWS_AS(map_j<R>(Form<R>(2)), std::invalid_argument);
}

TEST_CASE("bridge identities on all of gl(7)") {
  Sampler rng(402);
  for (int s = 0; s < 5; ++s) {
    auto [b1, b2] = bridge_residuals(rng.endo<R>());
    CHECK(b1 == Form<R>(4));
    CHECK(b2 == Form<R>(3));
  }
}

TEST_CASE("vector identities") {
  Sampler rng(403);
  for (int s = 0; s < 5; ++s) {
    auto [r1, r2] = vector_identity_residuals(rng.vec<R>(), rng.vec<R>());
    CHECK(r1 == Form<R>(3));
    CHECK(r2 == Form<R>(4));
  }
}

TEST_CASE("composition identities on their natural domains") {
  auto a = sym(pinned_sample<R>());
  auto g = map_i(a);  // a 3-form with no vector component
  auto res = composition_residuals(a, g, true);
  CHECK(res.j_after_i == Endo7<R>{});
  CHECK(res.i_after_j == Form<R>(3));
  CHECK(res.j_after_star_k == Endo7<R>{});
  CHECK(res.k_after_j == Form<R>(4));
}

TEST_CASE("strict mode rejects inputs outside the domains") {
  auto good_a = sym(pinned_sample<R>());
  auto good_g = map_i(good_a);
  Endo7<R> bad_a = Endo7<R>::identity();
  bad_a(0, 1) += 1;
  bad_a(1, 0) -= 1;
  CHECK_THROWS_AS(composition_residuals(bad_a, good_g, true), std::domain_error);
  Form<R> bad_g = good_g + cayley<R>().int_star_phi[0];
  CHECK_THROWS_AS(composition_residuals(good_a, bad_g, true), std::domain_error);
  // non-strict mode projects instead of throwing
  auto res = composition_residuals(bad_a, bad_g, false, R(0));
  CHECK(res.j_after_i == Endo7<R>{});
  CHECK(res.k_after_j == Form<R>(4));
}

TEST_CASE("sign-flipped composition variants fail by a known margin") {
  auto a = sym(pinned_sample<R>());
  const auto& C = cayley<R>();
  R s1 = sigma1(a);
  // j(*k(a)) = -4a - 4 sigma1 Id variant
  auto lhs = map_j<R>(hodge(map_k(a)));
  CHECK(l1(lhs - (a * R(-4) - Endo7<R>::identity() * (R(4) * s1))) == 304);
  CHECK(lhs == a * R(4) - Endo7<R>::identity() * (R(4) * s1));
  // k(j(g)) = 4*g + (7/3)(g,phi) *phi variant
  auto g = map_i(a);
  R gphi = form_inner(g, C.phi);
  CHECK(gphi == -9);
  auto kj = map_k(map_j<R>(g));
  CHECK(l1(kj - (hodge(g) * R(4) + C.star_phi * (rat(7, 3) * gphi))) == 399);
  CHECK(kj == hodge(g) * R(4) - C.star_phi * (R(4) * gphi));
}

TEST_CASE("exterior derivatives through the k and m maps") {
  auto t = pinned_sample<R>();
  auto c = components(t);
  CHECK(d_phi(t) == map_k(t.transpose()) * R(3));
  auto dp = split_4form(d_phi(t));
  CHECK(dp.part1 == map_k(c.c1) * R(3));
  CHECK(dp.part27 == map_k(c.c3) * R(3));
  CHECK(dp.part7 == map_k(c.c4) * R(-3));
  auto ds = split_5form(d_star_phi(t));
  CHECK(ds.part14 == map_m(c.c2) * R(3));
  CHECK(ds.part7 == map_m(c.c4) * R(-6));
  // the sign-positive variants leave pinned residuals 348 and 261
  CHECK(l1(dp.part7 - map_k(c.c4) * R(3)) == 348);
  CHECK(l1(ds.part7 - map_m(c.c4) * R(3)) == 261);
}
