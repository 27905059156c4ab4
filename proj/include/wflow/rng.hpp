#pragma once

// Counter-based random numbers: every draw is a pure hash of
// (seed, stream, counter, salt), so particle updates can run in any order
// or in parallel and still reproduce bit-identically for a given seed.

#include <cstdint>

namespace wflow::rng {

// splitmix64 finalizer; bijective 64-bit mix
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline std::uint64_t hash(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter,
                          std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = mix64(z ^ mix64(stream + 0xbf58476d1ce4e5b9ULL));
  z = mix64(z ^ mix64(counter + 0x94d049bb133111ebULL));
  z = mix64(z + salt);
  return z;
}

// uniform in [0, 1)
inline double uniform01(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

// uniform in (0, 1] (safe as a log argument)
inline double uniform01_open(std::uint64_t h) {
  return (static_cast<double>(h >> 11) + 1.0) * 0x1.0p-53;
}

// standard normal via Box-Muller from two independent hashes
double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace wflow::rng
