#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "g2/endo.hpp"
#include "g2/forms.hpp"

namespace g2 {

inline uint64_t fnv1a(std::string_view s, uint64_t h = 14695981039346656037ULL) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// Deterministic integer sampler; mt19937_64 has a portable stream, so runs
// with equal (seed, range) produce identical data on any platform.
struct Sampler {
  std::mt19937_64 eng;
  long range;

  explicit Sampler(uint64_t seed, long range_ = 9) : eng(seed), range(range_) {}

  long next_int() { return static_cast<long>(eng() % (2 * range + 1)) - range; }

  template <class S>
  S scalar() {
    return scalar_traits<S>::from_long(next_int());
  }

  template <class S>
  Vec7<S> vec() {
    Vec7<S> v;
    for (int i = 0; i < DIM; ++i) v[i] = scalar<S>();
    return v;
  }

  template <class S>
  Endo7<S> endo() {
    Endo7<S> a;
    for (int i = 0; i < DIM * DIM; ++i) a.m[i] = scalar<S>();
    return a;
  }

  template <class S>
  Form<S> form(int degree) {
    Form<S> f(degree);
    for (auto& c : f.c) c = scalar<S>();
    return f;
  }
};

}  // namespace g2
