#include "g2/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace g2 {

namespace {

// Reduce m to rref in place; returns the pivot column of each pivot row.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(RatMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<Rational> lin_solve(RatMatrix m, std::vector<Rational> b) {
  size_t rows = m.size();
  if (rows != b.size()) throw std::invalid_argument("lin_solve: size mismatch");
  size_t cols = m.empty() ? 0 : m[0].size();
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = rref(m);
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == static_cast<int>(cols))
      throw std::invalid_argument("lin_solve: inconsistent system");
    x[pivots[i]] = m[i][cols];
  }
  if (pivots.size() < cols) {
    // tolerate underdetermined systems only if every free variable is
    // genuinely free; callers here always pass full-rank systems
    for (size_t i = 0; i < rows; ++i) {
      bool zero_row = true;
      for (size_t j = 0; j < cols; ++j)
        if (m[i][j] != 0) { zero_row = false; break; }
      if (zero_row && m[i][cols] != 0)
        throw std::invalid_argument("lin_solve: inconsistent system");
    }
  }
  return x;
}

RatMatrix invert(const RatMatrix& m) {
  size_t n = m.size();
  RatMatrix aug = m;
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("invert: not square");
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  std::vector<int> pivots = rref(aug);
  if (pivots.size() != n) throw std::invalid_argument("invert: singular matrix");
  RatMatrix inv(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RatMatrix kernel_basis(RatMatrix m) {
  size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMatrix basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace g2
