#pragma once

#include <cstddef>

#include "sectoria/matrix.hpp"

namespace sectoria {

/// Conformal 2x2 split of an n×n matrix after its leading p×p block.
class BlockPartition {
 public:
  /// Throws InvalidArgument unless 1 ≤ p ≤ n−1.
  BlockPartition(std::size_t p, std::size_t n);

  std::size_t p() const noexcept { return p_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t trailing() const noexcept { return n_ - p_; }

 private:
  std::size_t p_;
  std::size_t n_;
};

struct Blocks {
  ComplexMatrix a11, a12, a21, a22;
};

Blocks split_blocks(const ComplexMatrix& a, const BlockPartition& part);

/// A/A₁₁ = A₂₂ − A₂₁ A₁₁⁻¹ A₁₂, with A₁₁⁻¹A₁₂ obtained by an LU solve.
/// Throws SingularLeadingBlock when A₁₁ is singular to the pivot threshold.
ComplexMatrix schur_complement(const ComplexMatrix& a, const BlockPartition& part);

/// ‖(A/A₁₁)⁻¹ − (A⁻¹)₂₂‖_F / ‖A⁻¹‖_F.
double inverse_block_identity(const ComplexMatrix& a, const BlockPartition& part);

/// Pieces of A/A₁₁ = M/M₁₁ + i(N/N₁₁) + Y(M₁₁⁻¹ − iN₁₁⁻¹)⁻¹Y* where
/// M = Re A, N = Im A and Y = M₂₁M₁₁⁻¹ − N₂₁N₁₁⁻¹.
struct CartesianSchurParts {
  ComplexMatrix m_part;      // M/M₁₁
  ComplexMatrix n_part;      // N/N₁₁
  ComplexMatrix y_factor;    // Y
  ComplexMatrix correction;  // Y(M₁₁⁻¹ − iN₁₁⁻¹)⁻¹Y*
  /// ‖m_part + i n_part + correction − A/A₁₁‖_F (absolute).
  double residual = 0.0;
  /// residual / ‖A‖_F
  double relative_residual = 0.0;
};

/// Requires Re A positive definite (NotAccretive otherwise); throws
/// SingularBlock when M₁₁ or N₁₁ is singular.
CartesianSchurParts cartesian_schur_identity(const ComplexMatrix& a, const BlockPartition& part);

/// ‖Re(A⁻¹) − (Re A + Im A (Re A)⁻¹ Im A)⁻¹‖_F / ‖A⁻¹‖_F for Re A ≻ 0.
double inverse_real_part_identity(const ComplexMatrix& a);

/// |det A − det A₁₁ · det(A/A₁₁)| / max(|det A|, tiny).
double determinant_quotient_residual(const ComplexMatrix& a, const BlockPartition& part);

}  // namespace sectoria
