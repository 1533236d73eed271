#include <doctest.h>

#include "g2/decomp.hpp"
#include "g2/rng.hpp"
#include "test_support.hpp"

using namespace g2;
using R = Rational;

TEST_CASE("oracle projector dimensions and traces") {
  auto dims = oracle_basis_dims();
  CHECK(dims == std::array<int, 4>{1, 14, 27, 7});
  const auto& P = oracle_projectors();
  for (int k = 0; k < 4; ++k) {
    R tr = 0;
    for (int d = 0; d < 49; ++d) tr += P[k][49 * d + d];
    CHECK(tr == dims[k]);
  }
}

TEST_CASE("p map normalization") {
  Sampler rng(201);
  auto v = rng.vec<R>();
  CHECK(p_map(a_v(v)) == v * R(6));
  auto a = rng.endo<R>();
  CHECK(p_map(sym(a)) == Vec7<R>{});
}

TEST_CASE("components reconstruct, land in the right types, and are orthogonal") {
  auto a = pinned_sample<R>();
  auto c = components(a);
  CHECK(c.c1 + c.c2 + c.c3 + c.c4 == a);
  CHECK(c.c1 == Endo7<R>::identity() * (a.trace() / R(7)));
  CHECK(is_in_g2(c.c2));
  CHECK(sym(c.c3) == c.c3);
  CHECK(c.c3.trace() == 0);
  CHECK(is_in_g2_perp(c.c4));

  const Endo7<R>* parts[4] = {&c.c1, &c.c2, &c.c3, &c.c4};
  for (int r = 0; r < 4; ++r)
    for (int s = r + 1; s < 4; ++s) CHECK(endo_inner(*parts[r], *parts[s]) == 0);
}

TEST_CASE("closed norm formulas match the components and satisfy pythagoras") {
  auto a = pinned_sample<R>();
  auto c = components(a);
  auto n = component_norms_sq(a);
  CHECK(n[0] == rat(9, 7));
  CHECK(n[1] == rat(86, 3));
  CHECK(n[2] == rat(619, 14));
  CHECK(n[3] == rat(191, 6));
  CHECK(n[0] == endo_norm_sq(c.c1));
  CHECK(n[1] == endo_norm_sq(c.c2));
  CHECK(n[2] == endo_norm_sq(c.c3));
  CHECK(n[3] == endo_norm_sq(c.c4));
  CHECK(n[0] + n[1] + n[2] + n[3] == endo_norm_sq(a));
}

TEST_CASE("closed components agree with the least-squares projectors") {
  Sampler rng(202);
  for (int s = 0; s < 5; ++s) {
    auto a = rng.endo<R>();
    auto c = components(a);
    CHECK(oracle_project(a, 0) == c.c1);
    CHECK(oracle_project(a, 1) == c.c2);
    CHECK(oracle_project(a, 2) == c.c3);
    CHECK(oracle_project(a, 3) == c.c4);
  }
}

TEST_CASE("decomposition commutes with the shift symmetry") {
  auto a = pinned_sample<R>();
  auto c = components(a);
  auto cs = components(shift_conj(a));
  CHECK(cs.c1 == shift_conj(c.c1));
  CHECK(cs.c2 == shift_conj(c.c2));
  CHECK(cs.c3 == shift_conj(c.c3));
  CHECK(cs.c4 == shift_conj(c.c4));
}
