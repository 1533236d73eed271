#include "g2/cayley.hpp"

#include <array>

namespace g2 {

namespace {

CayleyData build() {
  CayleyData d{};
  // phi = sum_{i in Z7} e_i* ^ e_{i+1}* ^ e_{i+3}*
  std::array<int, 35> phi{};
  for (int i = 0; i < DIM; ++i) {
    std::array<int, 3> seq{i, (i + 1) % 7, (i + 3) % 7};
    unsigned mask = (1u << seq[0]) | (1u << seq[1]) | (1u << seq[2]);
    phi[rank_of_mask(3, mask)] += sequence_sign(seq);
  }
  for (int r = 0; r < 35; ++r) d.phi[r] = phi[r];

  for (int r = 0; r < 35; ++r) {
    unsigned mask = mask_of_rank(3, r);
    d.star_phi[rank_of_mask(4, ~mask & 0x7Fu)] = d.phi[r] * complement_sign(mask);
  }

  // (e_i x e_j)_k = phi(e_i, e_j, e_k)
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) {
      d.cross_s[i][j] = 0;
      d.cross_k[i][j] = 0;
      if (i == j) continue;
      for (int k = 0; k < DIM; ++k) {
        if (k == i || k == j) continue;
        std::array<int, 3> seq{i, j, k};
        int sgn = sequence_sign(seq);
        unsigned mask = (1u << i) | (1u << j) | (1u << k);
        int c = phi[rank_of_mask(3, mask)];
        if (c != 0) {
          d.cross_k[i][j] = k;
          d.cross_s[i][j] = sgn * c;
          break;
        }
      }
    }
  return d;
}

}  // namespace

const CayleyData& cayley_data() {
  static const CayleyData d = build();
  return d;
}

}  // namespace g2
