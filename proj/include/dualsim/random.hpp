#pragma once

#include <cstdint>
#include <random>

namespace dualsim {

/// Seeded random stream with platform-independent uniform and normal draws.
/// std::*_distribution output is implementation-defined, so conversions are
/// done here to keep logs bit-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller. Always consumes exactly two uniforms.
  double normal();

  void discard_uniforms(unsigned count);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer applied to (base, stream); used to derive independent
/// sub-seeds from a campaign seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace dualsim
