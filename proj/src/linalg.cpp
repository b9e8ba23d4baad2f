#include "sectoria/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/kernels.hpp"

namespace sectoria {

CartesianPair cartesian_split(const ComplexMatrix& a) {
  require_square(a, "cartesian_split");
  const std::size_t n = a.n();
  CartesianPair out{ComplexMatrix(n), ComplexMatrix(n)};
  const Complex half_over_i(0.0, -0.5);  // 1/(2i)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex aij = a(i, j);
      const Complex aji_conj = std::conj(a(j, i));
      out.real_part(i, j) = 0.5 * (aij + aji_conj);
      out.imag_part(i, j) = half_over_i * (aij - aji_conj);
    }
  }
  return out;
}

ComplexMatrix cartesian_combine(const CartesianPair& parts) {
  return parts.real_part + Complex(0.0, 1.0) * parts.imag_part;
}

ComplexMatrix real_part(const ComplexMatrix& a) { return hermitian_part(a); }

ComplexMatrix imag_part(const ComplexMatrix& a) { return hermitian_part(Complex(0.0, -1.0) * a); }

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.n(); ++i)
    for (std::size_t j = 0; j < h.n(); ++j)
      if (i != j) sum += std::norm(h(i, j));
  return std::sqrt(sum);
}

void require_hermitian(const ComplexMatrix& h, const char* what) {
  require_square(h, what);
  if (!h.all_finite()) throw MathError(ErrorKind::NonFinite, what);
  if (hermitian_defect(h) > kHermitianInputTol * h.frobenius_norm()) {
    throw MathError(ErrorKind::NotHermitian, std::string(what) + " requires a Hermitian matrix");
  }
}

}  // namespace

HermitianEigenResult hermitian_eigen(const ComplexMatrix& input) {
  require_hermitian(input, "hermitian_eigen");
  const std::size_t n = input.n();
  ComplexMatrix h = hermitian_part(input);
  // Rows of vt are the columns of V, so rotations touch contiguous memory.
  ComplexMatrix vt = ComplexMatrix::identity(n);
  const double norm = h.frobenius_norm();
  const double target = kJacobiOffDiagonalTol * norm;

  int sweep = 0;
  while (off_diagonal_norm(h) > target) {
    if (sweep == kJacobiMaxSweeps) {
      throw MathError(ErrorKind::NotConverged,
                      "Jacobi exceeded " + std::to_string(kJacobiMaxSweeps) + " sweeps");
    }
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = h(p, q);
        const double r = std::abs(g);
        if (r == 0.0) continue;
        const Complex e = g / r;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;

        // H <- J* H J with J = [[c, s e], [-s conj(e), c]] on (p, q).
        kernels::rotate(c, -s * e, s * std::conj(e), c, h.row(p), h.row(q));
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          h(k, p) = std::conj(h(p, k));
          h(k, q) = std::conj(h(q, k));
        }
        h(p, p) = app - t * r;
        h(q, q) = aqq + t * r;
        h(p, q) = 0.0;
        h(q, p) = 0.0;

        // V <- V J, i.e. V^T <- J^T V^T.
        kernels::rotate(c, -s * std::conj(e), s * e, c, vt.row(p), vt.row(q));
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return h(x, x).real() < h(y, y).real(); });

  HermitianEigenResult result;
  result.sweeps = sweep;
  result.eigenvalues.resize(n);
  result.eigenvectors = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    result.eigenvalues[j] = h(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, j) = vt(order[j], i);
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  return hermitian_eigen(h).eigenvalues;
}

double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eigen(h).eigenvalues.front(); }

LuDecomposition::LuDecomposition(const ComplexMatrix& a) : lu_(a) {
  require_square(a, "LU decomposition");
  const std::size_t n = a.n();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  threshold_ = kPivotTolerance * a.frobenius_norm();
  min_pivot_ = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        pivot_row = i;
      }
    }
    min_pivot_ = std::min(min_pivot_, best);
    if (pivot_row != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(pivot_row).begin());
      std::swap(perm_[k], perm_[pivot_row]);
      sign_ = -sign_;
    }
    if (best == 0.0) {
      exactly_singular_ = true;
      continue;
    }
    const Complex pivot = lu_(k, k);
    const auto tail_k = lu_.row(k).subspan(k + 1);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex l = lu_(i, k) / pivot;
      lu_(i, k) = l;
      if (l != 0.0) kernels::axpy(-l, tail_k, lu_.row(i).subspan(k + 1));
    }
  }
  singular_ = exactly_singular_ || !(min_pivot_ >= threshold_) || threshold_ == 0.0;
}

Complex LuDecomposition::determinant() const {
  if (exactly_singular_) return 0.0;
  Complex det = static_cast<double>(sign_);
  for (std::size_t k = 0; k < lu_.n(); ++k) det *= lu_(k, k);
  return det;
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& b) const {
  if (b.rows() != lu_.n()) throw MathError(ErrorKind::DimensionMismatch, "LU solve");
  if (singular_) {
    throw MathError(ErrorKind::Singular, "pivot magnitude " + std::to_string(min_pivot_) +
                                             " below threshold " + std::to_string(threshold_));
  }
  const std::size_t n = lu_.n();
  ComplexMatrix x(b.rows(), b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = b.row(perm_[i]);
    std::copy(src.begin(), src.end(), x.row(i).begin());
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = k + 1; i < n; ++i)
      if (lu_(i, k) != 0.0) kernels::axpy(-lu_(i, k), x.row(k), x.row(i));
  for (std::size_t k = n; k-- > 0;) {
    const Complex inv_pivot = 1.0 / lu_(k, k);
    for (Complex& v : x.row(k)) v *= inv_pivot;
    for (std::size_t i = 0; i < k; ++i)
      if (lu_(i, k) != 0.0) kernels::axpy(-lu_(i, k), x.row(k), x.row(i));
  }
  return x;
}

ComplexMatrix LuDecomposition::inverse() const { return solve(ComplexMatrix::identity(lu_.n())); }

ComplexMatrix inverse(const ComplexMatrix& a) { return LuDecomposition(a).inverse(); }

Complex determinant(const ComplexMatrix& a) { return LuDecomposition(a).determinant(); }

ComplexMatrix leading_principal_submatrix(const ComplexMatrix& a, std::size_t k) {
  require_square(a, "leading_principal_submatrix");
  if (k < 1 || k > a.n()) {
    throw MathError(ErrorKind::IndexOutOfRange,
                    "principal submatrix order " + std::to_string(k) + " outside [1, " +
                        std::to_string(a.n()) + "]");
  }
  return a.block(0, 0, k, k);
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& h) {
  const HermitianEigenResult eig = hermitian_eigen(h);
  if (!(eig.eigenvalues.front() > 0.0)) {
    throw MathError(ErrorKind::NotPositiveDefinite,
                    "hermitian_sqrt: smallest eigenvalue " + std::to_string(eig.eigenvalues.front()));
  }
  const std::size_t n = h.n();
  ComplexMatrix scaled = eig.eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= std::sqrt(eig.eigenvalues[j]);
  return hermitian_part(scaled * eig.eigenvectors.adjoint());
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  require_square(a, "singular_values");
  std::vector<double> ev = hermitian_eigenvalues(hermitian_part(a.adjoint() * a));
  std::vector<double> sv(ev.rbegin(), ev.rend());
  for (double& v : sv) v = std::sqrt(std::max(v, 0.0));
  return sv;
}

bool is_positive_definite(const ComplexMatrix& h) {
  if (!h.is_square() || h.n() == 0 || !h.all_finite()) return false;
  if (hermitian_defect(h) > kHermitianInputTol * h.frobenius_norm()) return false;
  return min_eigenvalue(h) > 0.0;
}

void require_positive_definite(const ComplexMatrix& h, const char* what) {
  if (!is_positive_definite(h)) {
    throw MathError(ErrorKind::NotPositiveDefinite,
                    std::string(what) + " requires a Hermitian positive definite matrix");
  }
}

}  // namespace sectoria
