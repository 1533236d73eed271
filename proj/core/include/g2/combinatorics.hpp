#pragma once

#include <span>
#include <vector>

namespace g2 {

// Index sets I of strictly increasing indices in {0,...,6} are stored as
// 7-bit masks.  The basis of Lambda^k is the list of increasing k-tuples in
// lexicographic tuple order, which is not the numeric order of the masks
// (e.g. for k = 2 the tuple (0,6) precedes (1,2) while 0x41 > 0x06).

inline constexpr int DIM = 7;

int binom(int n, int k);

// masks of all degree-k basis tuples, in lex tuple order
const std::vector<unsigned>& masks_of_degree(int k);

int rank_of_mask(int k, unsigned mask);
unsigned mask_of_rank(int k, int r);

// Sign of the permutation sorting the concatenation of the tuples of m1 and
// m2 into increasing order; 0 when the masks overlap.
int wedge_sign(unsigned m1, unsigned m2);

// Sign of (I, I^c) as a permutation of (0,...,6).  This is the coefficient
// of the Hodge star on basis covectors: *e_I = complement_sign(I) e_{I^c}.
int complement_sign(unsigned mask);

// (-1)^pos where pos is the position of j inside the tuple of mask.
// Precondition: bit j is set in mask.
int interior_sign(unsigned mask, int j);

// Parity sign of an index sequence with respect to its sorted order,
// 0 if any index repeats.  Indices are reduced mod 7 first.
int sequence_sign(std::span<const int> seq);

}  // namespace g2
