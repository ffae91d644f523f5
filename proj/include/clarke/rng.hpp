#pragma once

#include <cmath>
#include <cstdint>

namespace clarke::rng {

// Counter-based generator: every variate is a pure function of
// (seed, stream, index, slot), so sampling is reproducible independently of
// evaluation order and worker count. Mixing is the splitmix64 finalizer.

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Key {
  std::uint64_t v;
};

inline Key make_key(std::uint64_t seed, std::uint64_t stream) {
  return Key{mix64(mix64(seed) ^ (stream * 0xd6e8feb86659fd93ull))};
}

inline std::uint64_t bits(Key key, std::uint64_t index, std::uint64_t slot) {
  return mix64(key.v ^ (index * 0xa0761d6478bd642full) ^ (slot * 0xe7037ed1a0b428dbull));
}

// Uniform in [0, 1).
inline double u01(Key key, std::uint64_t index, std::uint64_t slot) {
  return static_cast<double>(bits(key, index, slot) >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1]; safe under log().
inline double u01_open(Key key, std::uint64_t index, std::uint64_t slot) {
  return (static_cast<double>(bits(key, index, slot) >> 11) + 1.0) * 0x1.0p-53;
}

// Box-Muller pair from slots (2j, 2j+1).
inline void gaussian_pair(Key key, std::uint64_t index, std::uint64_t pair, double& z0, double& z1) {
  double u1 = u01_open(key, index, 2 * pair);
  double u2 = u01(key, index, 2 * pair + 1);
  double r = std::sqrt(-2.0 * std::log(u1));
  z0 = r * std::cos(6.283185307179586476925286766559 * u2);
  z1 = r * std::sin(6.283185307179586476925286766559 * u2);
}

// Stream ids; add new consumers at distinct values.
inline constexpr std::uint64_t kStreamBall = 1;
inline constexpr std::uint64_t kStreamCloud = 2;
inline constexpr std::uint64_t kStreamDensityBase = 0x100;
inline constexpr std::uint64_t kStreamDirections = 3;
inline constexpr std::uint64_t kStreamConeRays = 4;

}  // namespace clarke::rng
