#include "g2/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace g2 {

namespace {

struct Tables {
  std::array<std::vector<unsigned>, 8> masks;  // per degree, lex tuple order
  std::array<std::array<int, 128>, 8> rank;    // mask -> rank, -1 elsewhere

  Tables() {
    for (auto& row : rank) row.fill(-1);
    for (int k = 0; k <= DIM; ++k) {
      std::vector<int> tuple(k);
      build(k, 0, 0, 0u, tuple);
    }
  }

  void build(int k, int depth, int next, unsigned mask, std::vector<int>& tuple) {
    if (depth == k) {
      rank[k][mask] = static_cast<int>(masks[k].size());
      masks[k].push_back(mask);
      return;
    }
    for (int i = next; i <= DIM - (k - depth); ++i) {
      tuple[depth] = i;
      build(k, depth + 1, i + 1, mask | (1u << i), tuple);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<int>(r);
}

const std::vector<unsigned>& masks_of_degree(int k) {
  if (k < 0 || k > DIM) throw std::invalid_argument("masks_of_degree: degree out of range");
  return tables().masks[k];
}

int rank_of_mask(int k, unsigned mask) {
  if (k < 0 || k > DIM) throw std::invalid_argument("rank_of_mask: degree out of range");
  int r = tables().rank[k][mask & 0x7Fu];
  if (r < 0) throw std::invalid_argument("rank_of_mask: popcount mismatch");
  return r;
}

unsigned mask_of_rank(int k, int r) {
  const auto& m = masks_of_degree(k);
  if (r < 0 || r >= static_cast<int>(m.size()))
    throw std::invalid_argument("mask_of_rank: rank out of range");
  return m[r];
}

int wedge_sign(unsigned m1, unsigned m2) {
  if (m1 & m2) return 0;
  // count inversions between the two sorted tuples: pairs (i in m1, j in m2)
  // with j < i
  int inv = 0;
  for (unsigned rest = m1; rest;) {
    int i = std::countr_zero(rest);
    rest &= rest - 1;
    inv += std::popcount(m2 & ((1u << i) - 1u));
  }
  return (inv % 2 == 0) ? 1 : -1;
}

int complement_sign(unsigned mask) {
  return wedge_sign(mask & 0x7Fu, ~mask & 0x7Fu);
}

int interior_sign(unsigned mask, int j) {
  int pos = std::popcount(mask & ((1u << j) - 1u));
  return (pos % 2 == 0) ? 1 : -1;
}

int sequence_sign(std::span<const int> seq) {
  std::vector<int> v(seq.begin(), seq.end());
  for (auto& x : v) x = ((x % 7) + 7) % 7;
  int inv = 0;
  for (size_t a = 0; a < v.size(); ++a)
    for (size_t b = a + 1; b < v.size(); ++b) {
      if (v[a] == v[b]) return 0;
      if (v[a] > v[b]) ++inv;
    }
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace g2
