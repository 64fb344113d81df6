#pragma once

#include <cstdint>

namespace oodmech {

// Counter-based generator (splitmix64 core). Every random decision in the
// pipeline is derived from a single 64-bit seed through this class, so runs
// reproduce bit-identically across platforms and thread counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform();

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (two counter draws per pair, cached).
  double normal();

  // Unbiased integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

  // Independent child stream; children with distinct tags never collide.
  Rng fork(std::uint64_t tag) const;

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace oodmech
