#include "g2/decomp.hpp"

#include "g2/linalg.hpp"

namespace g2 {

namespace {

std::vector<Rational> flat49(const Endo7<Rational>& a) {
  return std::vector<Rational>(a.m.begin(), a.m.end());
}

// P = B^T G^{-1} B for a basis given as rows of B (d x 49), G the Gram matrix
std::vector<Rational> projector_from_basis(const RatMatrix& basis) {
  size_t d = basis.size();
  RatMatrix gram(d, std::vector<Rational>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Rational acc(0);
      for (size_t t = 0; t < 49; ++t) acc += basis[i][t] * basis[j][t];
      gram[i][j] = acc;
    }
  RatMatrix ginv = invert(gram);
  std::vector<Rational> p(49 * 49, Rational(0));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      if (ginv[i][j] == 0) continue;
      for (size_t t = 0; t < 49; ++t) {
        if (basis[i][t] == 0) continue;
        Rational f = ginv[i][j] * basis[i][t];
        for (size_t u = 0; u < 49; ++u) p[49 * t + u] += f * basis[j][u];
      }
    }
  return p;
}

std::array<std::vector<Rational>, 4> build_projectors() {
  std::array<RatMatrix, 4> bases;

  bases[0].push_back(flat49(Endo7<Rational>::identity()));

  // antisymmetric matrices in coordinates x_{rs}, r < s; the g2 conditions
  // read sum over family pairs of the signed coordinate
  auto pair_index = [](int r, int s) { return rank_of_mask(2, (1u << r) | (1u << s)); };
  RatMatrix constraints(DIM, std::vector<Rational>(21, Rational(0)));
  for (int i = 0; i < DIM; ++i)
    for (auto [r, s] : family_pairs(i)) {
      if (r < s)
        constraints[i][pair_index(r, s)] += 1;
      else
        constraints[i][pair_index(s, r)] -= 1;
    }
  for (const auto& x : kernel_basis(constraints)) {
    Endo7<Rational> a;
    for (int r = 0; r < DIM; ++r)
      for (int s = r + 1; s < DIM; ++s) {
        a(r, s) = x[pair_index(r, s)];
        a(s, r) = -x[pair_index(r, s)];
      }
    bases[1].push_back(flat49(a));
  }

  for (int r = 0; r < DIM; ++r)
    for (int s = r + 1; s < DIM; ++s) {
      Endo7<Rational> a;
      a(r, s) = 1;
      a(s, r) = 1;
      bases[2].push_back(flat49(a));
    }
  for (int i = 0; i + 1 < DIM; ++i) {
    Endo7<Rational> a;
    a(i, i) = 1;
    a(i + 1, i + 1) = -1;
    bases[2].push_back(flat49(a));
  }

  for (int i = 0; i < DIM; ++i)
    bases[3].push_back(flat49(a_v(Vec7<Rational>::basis(i))));

  std::array<std::vector<Rational>, 4> out;
  for (int k = 0; k < 4; ++k) out[k] = projector_from_basis(bases[k]);
  return out;
}

}  // namespace

std::array<int, 4> oracle_basis_dims() { return {1, 14, 27, 7}; }

const std::array<std::vector<Rational>, 4>& oracle_projectors() {
  static const std::array<std::vector<Rational>, 4> p = build_projectors();
  return p;
}

}  // namespace g2
