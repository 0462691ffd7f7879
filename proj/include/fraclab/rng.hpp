#pragma once

#include <cstdint>

namespace fraclab {

/// SplitMix64 finalizer. Used to derive statistically independent streams
/// from a master seed without shared state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

/// Deterministic per-mode seed: master xor-folded with (component, mode) and
/// finalized. Distinct (component, mode) pairs give distinct streams, so mode
/// paths are independent and ensembles reproduce exactly.
inline std::uint64_t mode_seed(std::uint64_t master, int component, int mode) {
  const std::uint64_t c = 0xC2B2AE3D27D4EB4FULL * std::uint64_t(component + 1);
  const std::uint64_t m = 0xD6E8FEB86659FD93ULL * std::uint64_t(mode + 1);
  return splitmix64(master ^ c ^ m);
}

/// Per-member seed for an ensemble run.
inline std::uint64_t ensemble_seed(std::uint64_t master, int member) {
  return splitmix64(master ^ (0xA24BAED4963EE407ULL * std::uint64_t(member + 1)));
}

}  // namespace fraclab
