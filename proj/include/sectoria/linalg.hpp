#pragma once

#include <cstddef>
#include <vector>

#include "sectoria/matrix.hpp"

namespace sectoria {

/// Hermitian pair with A = real_part + i * imag_part.
struct CartesianPair {
  ComplexMatrix real_part;
  ComplexMatrix imag_part;
};

/// Re A = (A + A*)/2, Im A = (A − A*)/(2i).
CartesianPair cartesian_split(const ComplexMatrix& a);

/// real + i*imag.
ComplexMatrix cartesian_combine(const CartesianPair& parts);

ComplexMatrix real_part(const ComplexMatrix& a);
ComplexMatrix imag_part(const ComplexMatrix& a);

struct HermitianEigenResult {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
  int sweeps = 0;
};

inline constexpr double kEigenTolerance = 1e-11;
inline constexpr double kJacobiOffDiagonalTol = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kHermitianInputTol = 1e-10;

/// Cyclic complex Jacobi. The input is symmetrized before iterating and must
/// be Hermitian to 1e-10 relative; throws NotConverged after 100 sweeps.
HermitianEigenResult hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues only, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& h);

inline constexpr double kPivotTolerance = 1e-13;

/// LU factorization with partial pivoting, P*A = L*U.
class LuDecomposition {
 public:
  explicit LuDecomposition(const ComplexMatrix& a);

  std::size_t n() const noexcept { return lu_.n(); }
  /// True when some pivot magnitude fell below 1e-13 * ‖A‖_F.
  bool singular() const noexcept { return singular_; }
  double min_pivot() const noexcept { return min_pivot_; }
  double threshold() const noexcept { return threshold_; }

  Complex determinant() const;
  /// Solves A X = B; throws Singular when the factorization is singular.
  ComplexMatrix solve(const ComplexMatrix& b) const;
  ComplexMatrix inverse() const;

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  bool singular_ = false;
  bool exactly_singular_ = false;
  double min_pivot_ = 0.0;
  double threshold_ = 0.0;
};

/// Throws Singular when a pivot falls below 1e-13 * ‖A‖_F.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Product of the LU pivots with the permutation sign. Never throws on
/// singular input; the result is then (close to) zero.
Complex determinant(const ComplexMatrix& a);

/// Top-left k×k block A_k, 1 ≤ k ≤ n.
ComplexMatrix leading_principal_submatrix(const ComplexMatrix& a, std::size_t k);

/// Hermitian positive definite square root V diag(√λ) V*.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& h);

/// Singular values, descending.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Hermitian to 1e-10 relative and smallest eigenvalue > 0.
bool is_positive_definite(const ComplexMatrix& h);

/// Throws NotPositiveDefinite unless is_positive_definite(h).
void require_positive_definite(const ComplexMatrix& h, const char* what);

}  // namespace sectoria
