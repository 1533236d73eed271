#include <doctest.h>

#include <stdexcept>

#include "g2/forms.hpp"
#include "g2/rng.hpp"

using namespace g2;
using R = Rational;

TEST_CASE("monomials and the determinant evaluation convention") {
  Form<R> e01 = monomial<R>({0, 1});
  CHECK(e01.c[rank_of_mask(2, 0x03u)] == 1);
  CHECK(eval(e01, {Vec7<R>::basis(0), Vec7<R>::basis(1)}) == 1);
  CHECK(eval(e01, {Vec7<R>::basis(1), Vec7<R>::basis(0)}) == -1);
  CHECK(monomial<R>({1, 0}) == -e01);
  CHECK(l1(monomial<R>({1, 1})) == 0);

  // e_I(e_I) = 1 with no 1/p! factor
  Form<R> e013 = monomial<R>({0, 1, 3});
  CHECK(eval(e013, {Vec7<R>::basis(0), Vec7<R>::basis(1), Vec7<R>::basis(3)}) == 1);
}

TEST_CASE("wedge products") {
  Form<R> a = monomial<R>({0}) + monomial<R>({2});
  Form<R> b = monomial<R>({1});
  Form<R> ab = wedge(a, b);
  CHECK(ab == monomial<R>({0, 1}) - monomial<R>({1, 2}));
  Form<R> over = wedge(vol_form<R>(), monomial<R>({0}));
  CHECK(over.degree == 8);
  CHECK(over.c.empty());
}

TEST_CASE("hodge star on monomials") {
  CHECK(hodge(Form<R>(0) + monomial<R>({}, 1)) == vol_form<R>());
  CHECK(hodge(vol_form<R>()) == monomial<R>({}, 1));
  CHECK(hodge(monomial<R>({0})) == monomial<R>({1, 2, 3, 4, 5, 6}));
  CHECK(hodge(monomial<R>({1})) == -monomial<R>({0, 2, 3, 4, 5, 6}));
  Sampler rng(7);
  for (int k = 0; k <= 7; ++k) {
    Form<R> f = rng.form<R>(k);
    CHECK(hodge(hodge(f)) == f);
  }
}

TEST_CASE("interior product signs and errors") {
  Form<R> e01 = monomial<R>({0, 1});
  CHECK(interior(0, e01) == monomial<R>({1}));
  CHECK(interior(1, e01) == -monomial<R>({0}));
  Vec7<R> x = Vec7<R>::basis(2);
  CHECK_THROWS_WITH_AS(interior(x, Form<R>(0)), "cannot contract a scalar",
                       std::invalid_argument);
}

TEST_CASE("inner products and musical isomorphisms") {
  Sampler rng(11);
  Vec7<R> x = rng.vec<R>(), y = rng.vec<R>();
  CHECK(sharp(flat(x)) == x);
  CHECK(form_inner(flat(x), flat(y)) == dot(x, y));
  Form<R> f = rng.form<R>(3), g = rng.form<R>(3);
  CHECK(tensor_inner(f, g) == form_inner(f, g) * 6);
  CHECK(wedge(f, hodge(g)) == vol_form<R>() * form_inner(f, g));
}

TEST_CASE("cyclic shift pullback") {
  CHECK(shift_form(monomial<R>({0, 1})) == monomial<R>({1, 2}));
  CHECK(shift_form(monomial<R>({6})) == monomial<R>({0}));
  CHECK(shift_form(monomial<R>({5, 6})) == monomial<R>({6, 0}));
  Sampler rng(3);
  Form<R> f = rng.form<R>(4), g = rng.form<R>(3);
  // the shift is an isometry and an algebra map
  CHECK(form_inner(shift_form(f), shift_form(f)) == form_inner(f, f));
  CHECK(shift_form(wedge(g, f)) == wedge(shift_form(g), shift_form(f)));
}
