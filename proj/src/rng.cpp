#include "sectoria/rng.hpp"

#include <cmath>
#include <numbers>

namespace sectoria {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53 = 9007199254740992.0;
}  // namespace

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(splitmix64_mix(seed ^ splitmix64_mix(stream * kGamma + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t RngStream::next_u64() noexcept {
  ++counter_;
  return splitmix64_mix(key_ + counter_ * kGamma);
}

double RngStream::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) / kTwoPow53;
}

double RngStream::uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

namespace {

// Box–Muller on (0, 1] x [0, 1).
void box_muller(RngStream& rng, double& z0, double& z1) {
  const double u1 = static_cast<double>((rng.next_u64() >> 11) + 1) / kTwoPow53;
  const double u2 = rng.uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  z0 = radius * std::cos(angle);
  z1 = radius * std::sin(angle);
}

}  // namespace

double RngStream::normal() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_normal_;
  }
  double z0 = 0.0;
  box_muller(*this, z0, cached_normal_);
  has_cached_ = true;
  return z0;
}

Complex RngStream::complex_normal() noexcept {
  double z0 = 0.0;
  double z1 = 0.0;
  box_muller(*this, z0, z1);
  return {z0 * std::numbers::sqrt2 / 2.0, z1 * std::numbers::sqrt2 / 2.0};
}

}  // namespace sectoria
