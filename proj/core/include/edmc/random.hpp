#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace edmc {

using Rng = std::mt19937_64;

/// One splitmix64 step. Used to derive independent, reproducible seed
/// streams from a single master seed.
constexpr uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes a master seed with a sequence of indices (method, instance,
/// repetition, ...) into one subordinate seed.
constexpr uint64_t mix_seed(uint64_t master, std::initializer_list<uint64_t> parts) {
  uint64_t s = splitmix64(master);
  for (uint64_t p : parts) s = splitmix64(s ^ splitmix64(p));
  return s;
}

inline Rng make_rng(uint64_t seed) { return Rng(splitmix64(seed)); }

}  // namespace edmc
