#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sectoria/matrix.hpp"
#include "sectoria/rng.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

/// Parameters of a reproducible randomized suite.
struct TrialConfig {
  std::uint64_t seed = 0;
  std::size_t n = 2;
  SectorAngle alpha;
  std::size_t trials = 1;
  std::optional<std::size_t> partition;

  /// Throws InvalidArgument on trials = 0, n = 0, a partition outside
  /// [1, n−1], or α ≥ π/2 − 0.01.
  void validate() const;
  /// Explicit partition, else ⌊n/2⌋.
  std::size_t partition_or_default() const;
};

/// Generators refuse angles this close to π/2.
inline constexpr double kGeneratorAngleGuard = 0.01;
/// X is redrawn while its smallest singular value is below this.
inline constexpr double kMinFactorSingularValue = 1e-3;

/// G G* + 0.1 I with G complex Gaussian.
ComplexMatrix gen_positive_definite(std::size_t n, RngStream& rng);
ComplexMatrix gen_positive_definite(std::size_t n, std::uint64_t seed);

/// A planted sectorial matrix together with its factors.
struct PlantedSectorial {
  ComplexMatrix a;
  ComplexMatrix x;
  std::vector<double> thetas;  // as drawn; thetas[0] == alpha
};

/// X diag(e^{iθ}) X* with θ_j uniform on [−α, α] and θ₁ = α.
PlantedSectorial gen_sectorial_planted(std::size_t n, SectorAngle alpha, RngStream& rng);
ComplexMatrix gen_sectorial(std::size_t n, SectorAngle alpha, RngStream& rng);
ComplexMatrix gen_sectorial(std::size_t n, SectorAngle alpha, std::uint64_t seed);

/// H + iK with H, K independent positive definite draws.
ComplexMatrix gen_accretive_dissipative(std::size_t n, RngStream& rng);
ComplexMatrix gen_accretive_dissipative(std::size_t n, std::uint64_t seed);

/// n+1 entries with a₀ = 1 and a_k log-uniform on [lo, hi] for k ≥ 1.
std::vector<double> gen_log_uniform_sequence(std::size_t n, double lo, double hi, RngStream& rng);

}  // namespace sectoria
