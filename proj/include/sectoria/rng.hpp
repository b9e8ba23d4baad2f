#pragma once

#include <cstdint>

#include "sectoria/matrix.hpp"

namespace sectoria {

/// SplitMix64 in counter mode. A stream is keyed by (seed, stream index), so
/// trial t of a suite draws from RngStream(seed, t) no matter which worker
/// runs it or in what order.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform on [0, 1).
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept;
  /// Standard normal via Box–Muller (the partner deviate is cached).
  double normal() noexcept;
  /// Circular complex Gaussian with E|z|² = 1.
  Complex complex_normal() noexcept;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

}  // namespace sectoria
