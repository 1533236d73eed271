#include <doctest.h>

#include <array>
#include <stdexcept>

#include "g2/combinatorics.hpp"

using namespace g2;

TEST_CASE("binomial sizes") {
  CHECK(binom(7, 0) == 1);
  CHECK(binom(7, 2) == 21);
  CHECK(binom(7, 3) == 35);
  CHECK(binom(7, 4) == 35);
  CHECK(binom(7, 7) == 1);
  CHECK(binom(7, 8) == 0);
  CHECK(binom(7, -1) == 0);
}

TEST_CASE("basis tuples are in lex tuple order, not mask order") {
  const auto& m2 = masks_of_degree(2);
  REQUIRE(m2.size() == 21);
  CHECK(m2[0] == 0x03u);  // (0,1)
  CHECK(m2[5] == 0x41u);  // (0,6)
  CHECK(m2[6] == 0x06u);  // (1,2): numerically smaller than (0,6)'s mask
  CHECK(rank_of_mask(2, 0x41u) == 5);
  CHECK(rank_of_mask(2, 0x06u) == 6);
  for (int k = 0; k <= 7; ++k) {
    const auto& mk = masks_of_degree(k);
    CHECK(static_cast<int>(mk.size()) == binom(7, k));
    for (int r = 0; r < static_cast<int>(mk.size()); ++r)
      CHECK(rank_of_mask(k, mask_of_rank(k, r)) == r);
  }
  CHECK_THROWS_AS(rank_of_mask(2, 0x07u), std::invalid_argument);
  CHECK_THROWS_AS(masks_of_degree(8), std::invalid_argument);
}

TEST_CASE("wedge and complement signs") {
  CHECK(wedge_sign(0x01u, 0x02u) == 1);   // e0 ^ e1
  CHECK(wedge_sign(0x02u, 0x01u) == -1);  // e1 ^ e0
  CHECK(wedge_sign(0x01u, 0x01u) == 0);
  CHECK(wedge_sign(0x06u, 0x01u) == 1);   // (1,2),(0): two inversions
  CHECK(complement_sign(0x07u) == 1);     // (0,1,2 | 3,4,5,6)
  CHECK(complement_sign(0x02u) == -1);    // (1 | 0,2,3,4,5,6)
  CHECK(complement_sign(0x00u) == 1);
  CHECK(complement_sign(0x7Fu) == 1);
}

TEST_CASE("interior position sign") {
  CHECK(interior_sign(0x07u, 0) == 1);
  CHECK(interior_sign(0x07u, 1) == -1);
  CHECK(interior_sign(0x07u, 2) == 1);
  CHECK(interior_sign(0x50u, 6) == -1);  // (4,6): position 1
}

TEST_CASE("sequence parity with mod-7 reduction") {
  std::array<int, 3> inc{0, 1, 3};
  CHECK(sequence_sign(inc) == 1);
  std::array<int, 2> swap{2, 1};
  CHECK(sequence_sign(swap) == -1);
  std::array<int, 2> dup{1, 8};  // 8 = 1 mod 7
  CHECK(sequence_sign(dup) == 0);
  std::array<int, 3> wrapped{5, 6, 8};  // (5,6,1) has two inversions
  CHECK(sequence_sign(wrapped) == 1);
}
