#pragma once

#include <cstdint>
#include <random>

namespace qcldpc {

// All randomness flows through one generator type so that a (seed, draw
// order) pair pins every artifact bit-exactly. Bounded draws avoid
// std::uniform_int_distribution, whose stream is implementation defined.
using Rng = std::mt19937_64;

inline Rng make_rng(uint64_t seed) { return Rng(seed); }

// Child stream for worker k, decorrelated from the parent seed by a
// splitmix64 round. Used by the trial pool and the K-fan decoders.
inline uint64_t child_seed(uint64_t master, uint64_t stream) {
  uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform draw in [0, n) by rejection; n = 0 is a caller bug.
inline uint64_t rng_below(Rng& rng, uint64_t n) {
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool rng_bit(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace qcldpc
