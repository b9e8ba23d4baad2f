#include "sectoria/sector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/kernels.hpp"
#include "sectoria/linalg.hpp"

namespace sectoria {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kDecomposeDefiniteness = 1e-12;
constexpr int kBisectionSteps = 60;

// cos(β) Re A − sin(β) Im A = Re(e^{iβ} A).
ComplexMatrix rotated_real_part(const CartesianPair& parts, double beta) {
  return std::cos(beta) * parts.real_part - std::sin(beta) * parts.imag_part;
}

std::vector<Complex> column(const ComplexMatrix& m, std::size_t j) {
  std::vector<Complex> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, j);
  return v;
}

// x* A x
Complex quadratic_form(const ComplexMatrix& a, std::span<const Complex> x) {
  std::vector<Complex> ax(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) acc += a(i, j) * x[j];
    ax[i] = acc;
  }
  return kernels::dot(x, ax);
}

}  // namespace

SectorAngle::SectorAngle(double radians) : radians_(radians) {
  if (!(radians >= 0.0 && radians < kHalfPi)) {
    throw MathError(ErrorKind::InvalidArgument,
                    "sector angle " + std::to_string(radians) + " outside [0, pi/2)");
  }
}

double SectorAngle::sec() const noexcept { return 1.0 / std::cos(radians_); }

SectorMembership in_sector(const ComplexMatrix& a, SectorAngle alpha, double tol) {
  require_square(a, "in_sector");
  const CartesianPair parts = cartesian_split(a);
  const double norm = a.frobenius_norm();
  const double scale = norm > 0.0 ? norm : 1.0;
  const double beta = kHalfPi - alpha.radians();

  SectorMembership out;
  out.inside = true;
  out.margin = std::numeric_limits<double>::infinity();

  auto consider = [&](double b, bool strict) {
    const HermitianEigenResult eig = hermitian_eigen(rotated_real_part(parts, b));
    const double m = eig.eigenvalues.front() / scale;
    const bool ok = strict ? (m > tol) : (m >= -tol);
    if (m < out.margin) {
      out.margin = m;
      out.beta = b;
      out.witness = column(eig.eigenvectors, 0);
    }
    if (!ok && out.inside) {
      out.inside = false;
      out.beta = b;
      out.witness = column(eig.eigenvectors, 0);
    }
  };
  consider(beta, false);
  consider(-beta, false);
  consider(0.0, true);
  if (!out.inside) {
    // Report the margin of the violated condition.
    const ComplexMatrix r = rotated_real_part(parts, out.beta);
    out.margin = min_eigenvalue(r) / scale;
  }
  return out;
}

ComplexMatrix SectorialDecomposition::z() const {
  std::vector<Complex> diag(thetas.size());
  for (std::size_t j = 0; j < thetas.size(); ++j) diag[j] = std::polar(1.0, thetas[j]);
  return ComplexMatrix::diagonal(std::span<const Complex>(diag));
}

ComplexMatrix SectorialDecomposition::reconstruct() const { return x * z() * x.adjoint(); }

SectorialDecomposition sectorial_decompose(const ComplexMatrix& a) {
  require_square(a, "sectorial_decompose");
  const CartesianPair parts = cartesian_split(a);
  const std::size_t n = a.n();
  const HermitianEigenResult h_eig = hermitian_eigen(parts.real_part);
  const double floor = kDecomposeDefiniteness * a.frobenius_norm();
  if (!(h_eig.eigenvalues.front() > floor)) {
    throw MathError(ErrorKind::NotSectorial,
                    "Re A is not positive definite (smallest eigenvalue " +
                        std::to_string(h_eig.eigenvalues.front()) + ")");
  }

  ComplexMatrix sqrt_scaled = h_eig.eigenvectors;
  ComplexMatrix inv_sqrt_scaled = h_eig.eigenvectors;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double root = std::sqrt(h_eig.eigenvalues[j]);
      sqrt_scaled(i, j) *= root;
      inv_sqrt_scaled(i, j) /= root;
    }
  }
  const ComplexMatrix v_adj = h_eig.eigenvectors.adjoint();
  const ComplexMatrix h_sqrt = hermitian_part(sqrt_scaled * v_adj);
  const ComplexMatrix h_inv_sqrt = hermitian_part(inv_sqrt_scaled * v_adj);

  const ComplexMatrix congruent = hermitian_part(h_inv_sqrt * parts.imag_part * h_inv_sqrt);
  const HermitianEigenResult c_eig = hermitian_eigen(congruent);

  // Eigenvalues come ascending; atan is increasing, so reverse for descending θ.
  ComplexMatrix u(n);
  SectorialDecomposition out;
  out.thetas.resize(n);
  std::vector<double> column_scale(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = n - 1 - j;
    const double d = c_eig.eigenvalues[src];
    out.thetas[j] = std::atan(d);
    column_scale[j] = std::sqrt(std::sqrt(1.0 + d * d));
    for (std::size_t i = 0; i < n; ++i) u(i, j) = c_eig.eigenvectors(i, src);
  }
  out.x = h_sqrt * u;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.x(i, j) *= column_scale[j];
  return out;
}

SectorAngle sector_angle(const ComplexMatrix& a) {
  const SectorialDecomposition dec = sectorial_decompose(a);
  double angle = 0.0;
  for (double t : dec.thetas) angle = std::max(angle, std::abs(t));
  if (angle >= kHalfPi - kRightAngleGuard) {
    throw MathError(ErrorKind::NotSectorial, "numerical range touches the imaginary axis");
  }
  return SectorAngle(angle);
}

SectorAngle sector_angle_by_bisection(const ComplexMatrix& a) {
  require_square(a, "sector_angle_by_bisection");
  if (!(min_eigenvalue(real_part(a)) > 0.0)) {
    throw MathError(ErrorKind::NotSectorial, "Re A is not positive definite");
  }
  double lo = 0.0;
  double hi = kHalfPi;
  for (int step = 0; step < kBisectionSteps; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (in_sector(a, SectorAngle(mid), 0.0).inside) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (hi >= kHalfPi - kRightAngleGuard) {
    throw MathError(ErrorKind::NotSectorial, "numerical range touches the imaginary axis");
  }
  return SectorAngle(hi);
}

std::vector<Complex> numerical_range_boundary(const ComplexMatrix& a, std::size_t m) {
  require_square(a, "numerical_range_boundary");
  if (m < 3) throw MathError(ErrorKind::InvalidArgument, "need at least 3 boundary points");
  const CartesianPair parts = cartesian_split(a);
  std::vector<Complex> points;
  points.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(m);
    // Re(e^{-iφ} A) = cos φ Re A + sin φ Im A.
    const ComplexMatrix support = std::cos(phi) * parts.real_part + std::sin(phi) * parts.imag_part;
    const HermitianEigenResult eig = hermitian_eigen(support);
    const Complex z = quadratic_form(a, column(eig.eigenvectors, a.n() - 1));
    points.emplace_back(z.real() + 0.0, z.imag() + 0.0);
  }
  return points;
}

}  // namespace sectoria
