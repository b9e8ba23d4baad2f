#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

#include "sectoria/matrix.hpp"

namespace sectoria {

/// Half-opening angle of the sector S_α = {z : Re z > 0, |Im z| ≤ Re z·tan α},
/// in radians, 0 ≤ α < π/2.
class SectorAngle {
 public:
  SectorAngle() = default;
  /// Throws InvalidArgument outside [0, π/2).
  explicit SectorAngle(double radians);

  double radians() const noexcept { return radians_; }
  double degrees() const noexcept { return radians_ * 180.0 / std::numbers::pi; }
  double sec() const noexcept;

  friend auto operator<=>(const SectorAngle&, const SectorAngle&) = default;

 private:
  double radians_ = 0.0;
};

/// Closed-cone angles at or beyond this value are reported as NotSectorial.
inline constexpr double kRightAngleGuard = 1e-9;

struct SectorMembership {
  bool inside = false;
  /// Worst (most negative) normalized eigenvalue among the three half-plane
  /// conditions, divided by ‖A‖_F.
  double margin = 0.0;
  /// Rotation β of the violated condition Re(e^{iβ}A) ⪰ 0; 0 means the
  /// strict Re A ≻ 0 condition.
  double beta = 0.0;
  /// Eigenvector achieving the margin; x*Ax is a witness point of W(A).
  std::vector<Complex> witness;
};

/// Tests W(A) ⊂ S_α through the half-plane conditions
/// λ_min(Re(e^{±i(π/2−α)}A)) ≥ −tol·‖A‖_F and λ_min(Re A) > tol·‖A‖_F.
SectorMembership in_sector(const ComplexMatrix& a, SectorAngle alpha, double tol);

/// A = X diag(e^{iθ_j}) X* with θ sorted descending.
struct SectorialDecomposition {
  ComplexMatrix x;
  std::vector<double> thetas;

  ComplexMatrix z() const;
  ComplexMatrix reconstruct() const;
};

/// H^{1/2}-congruence construction: with H = Re A, K = Im A and
/// H^{-1/2} K H^{-1/2} = U diag(d) U*, θ_j = atan d_j and
/// X = H^{1/2} U diag((1 + d_j²)^{1/4}). Throws NotSectorial unless
/// λ_min(Re A) > 1e-12·‖A‖_F.
SectorialDecomposition sectorial_decompose(const ComplexMatrix& a);

/// max_j |θ_j| of the decomposition, the smallest α with W(A) ⊂ S̄_α.
SectorAngle sector_angle(const ComplexMatrix& a);

/// Independent route: 60-step bisection of α over in_sector with zero
/// tolerance. Throws NotSectorial when Re A is not positive definite.
SectorAngle sector_angle_by_bisection(const ComplexMatrix& a);

/// m points x*Ax on the boundary of W(A), one per support direction
/// φ_t = 2πt/m (top eigenvector of Re(e^{−iφ_t}A)).
std::vector<Complex> numerical_range_boundary(const ComplexMatrix& a, std::size_t m);

}  // namespace sectoria
