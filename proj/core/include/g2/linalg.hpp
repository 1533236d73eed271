#pragma once

#include <vector>

#include "g2/rational.hpp"

namespace g2 {

using RatMatrix = std::vector<std::vector<Rational>>;

int rank(RatMatrix m);

// Solve m x = b; throws std::invalid_argument when the system is singular
// or inconsistent.
std::vector<Rational> lin_solve(RatMatrix m, std::vector<Rational> b);

// Inverse of a square matrix; throws on singular input.
RatMatrix invert(const RatMatrix& m);

// Basis of the null space of m (rows of the result are kernel vectors),
// via the free columns of the reduced row echelon form.
RatMatrix kernel_basis(RatMatrix m);

}  // namespace g2
