#pragma once

#include <cstdint>
#include <random>

namespace hsm {

/// Seedable generator with deterministic child streams.
///
/// `derive(k)` returns an independent stream keyed by (seed, k) so work items
/// can draw in any order (or on any thread) and still reproduce bit-for-bit.
class Rng {
 public:
  using Engine = std::mt19937_64;

  explicit Rng(std::uint64_t seed = 0);

  std::uint64_t seed() const { return seed_; }
  Rng derive(std::uint64_t stream) const;

  double uniform(double lo = 0.0, double hi = 1.0);
  double normal(double mean = 0.0, double std = 1.0);
  std::uint64_t index(std::uint64_t n);  ///< uniform in [0, n)

  Engine& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  Engine engine_;
};

/// SplitMix64 finalizer, used to decorrelate derived seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace hsm
