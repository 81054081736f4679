#pragma once

#include <cstdint>
#include <random>

namespace rorc {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for trial `index` under `seed`; the stream depends
/// only on the pair, so trials can be evaluated in any order.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) {
  return std::mt19937_64(splitmix64(splitmix64(seed ^ splitmix64(stream)) + index));
}

}  // namespace rorc
