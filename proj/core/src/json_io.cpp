#include "g2/json_io.hpp"

#include "g2/combinatorics.hpp"

namespace g2 {

std::string coeff_key(int degree, int rank) {
  unsigned mask = mask_of_rank(degree, rank);
  std::string key;
  for (int b = 0; b < DIM; ++b) {
    if (!(mask & (1u << b))) continue;
    if (!key.empty()) key += ',';
    key += static_cast<char>('0' + b);
  }
  return key;
}

int rank_of_key(int degree, const std::string& key, const std::string& where) {
  auto fail = [&](const std::string& why) -> int {
    throw ParseError(where + "[\"" + key + "\"]: " + why);
  };
  if (degree == 0) {
    if (!key.empty()) fail("degree-0 coefficient key must be \"\"");
    return 0;
  }
  unsigned mask = 0;
  int count = 0, prev = -1;
  size_t pos = 0;
  while (pos < key.size()) {
    size_t comma = key.find(',', pos);
    std::string tok = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.size() != 1 || tok[0] < '0' || tok[0] > '6')
      fail("index '" + tok + "' is not in 0..6");
    int idx = tok[0] - '0';
    if (idx <= prev) fail("indices must be strictly increasing");
    prev = idx;
    mask |= 1u << idx;
    ++count;
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == key.size()) fail("trailing comma");
  }
  if (count != degree) fail("tuple length does not match the degree");
  return rank_of_mask(degree, mask);
}

}  // namespace g2
