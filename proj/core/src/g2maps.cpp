#include "g2/g2maps.hpp"

#include <string>

#include "g2/rng.hpp"

namespace g2 {

namespace {

JTableData build_j_table() {
  JTableData jt{};
  const auto& C = cayley<Rational>();
  for (int i = 0; i < DIM; ++i)
    for (int j = 0; j < DIM; ++j) {
      Form<Rational> pre = wedge(C.int_phi[i], C.int_phi[j]);
      for (int K = 0; K < 35; ++K) {
        Form<Rational> eK(3);
        eK.c[K] = 1;
        Rational v = hodge(wedge(pre, eK)).c[0];
        jt.c[i][j][K] = static_cast<int>(v.get_num().get_si());
      }
    }
  return jt;
}

}  // namespace

const JTableData& j_table() {
  static const JTableData jt = [] {
    JTableData t = build_j_table();
    uint64_t h = 14695981039346656037ULL;
    for (int i = 0; i < DIM; ++i)
      for (int j = 0; j < DIM; ++j)
        for (int K = 0; K < 35; ++K) h = fnv1a(std::to_string(t.c[i][j][K]) + ";", h);
    t.fnv = h;
    return t;
  }();
  return jt;
}

}  // namespace g2
