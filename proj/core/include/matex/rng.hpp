#pragma once

#include <cstdint>
#include <random>

namespace matex {

// All randomized operations take explicit 64-bit seeds. Streams are
// std::mt19937_64 seeded through splitmix64; child streams are derived
// with split(seed, tag) so independent subtasks never share a stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace matex
