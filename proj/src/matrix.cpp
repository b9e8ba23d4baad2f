#include "sectoria/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/kernels.hpp"

namespace sectoria {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw MathError(ErrorKind::DimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) throw MathError(ErrorKind::NonFinite, "matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::from_parts(std::size_t rows, std::size_t cols,
                                        std::span<const double> re, std::span<const double> im) {
  if (re.size() != rows * cols || im.size() != rows * cols) {
    throw MathError(ErrorKind::DimensionMismatch, "real/imaginary arrays do not match shape");
  }
  ComplexMatrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) m.data_[k] = {re[k], im[k]};
  if (!m.all_finite()) throw MathError(ErrorKind::NonFinite, "matrix entries must be finite");
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw MathError(ErrorKind::IndexOutOfRange, "block exceeds matrix bounds");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + i) * cols_ + c0), nc,
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * nc));
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) {
    throw MathError(ErrorKind::IndexOutOfRange, "block exceeds matrix bounds");
  }
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

double ComplexMatrix::frobenius_norm() const noexcept {
  // Scaled accumulation so tiny or huge entries do not under/overflow.
  double scale = 0.0;
  double ssq = 1.0;
  for (const Complex& z : data_) {
    for (double v : {z.real(), z.imag()}) {
      if (v == 0.0) continue;
      const double a = std::abs(v);
      if (scale < a) {
        ssq = 1.0 + ssq * (scale / a) * (scale / a);
        scale = a;
      } else {
        ssq += (a / scale) * (a / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Complex ComplexMatrix::trace() const {
  require_square(*this, "trace");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw MathError(ErrorKind::DimensionMismatch, "operator+=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw MathError(ErrorKind::DimensionMismatch, "operator-=");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw MathError(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix c;
  kernels::gemm(a, b, c);
  return c;
}

ComplexMatrix multiply_reference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw MathError(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix c;
  kernels::scalar::gemm(a, b, c);
  return c;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

double hermitian_defect(const ComplexMatrix& a) {
  require_square(a, "hermitian_defect");
  return (a - a.adjoint()).frobenius_norm();
}

ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  require_square(a, "hermitian_part");
  const std::size_t n = a.n();
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      h(i, j) = v;
      h(j, i) = std::conj(v);
    }
  }
  return h;
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square() || a.rows() == 0) {
    throw MathError(ErrorKind::NotSquare, std::string(what) + " requires a non-empty square matrix");
  }
}

void require_same_dimension(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.n() != b.n()) {
    throw MathError(ErrorKind::DimensionMismatch, std::string(what) + " operands differ in size");
  }
}

}  // namespace sectoria
