#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sectoria {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Public operations of the library act on square matrices; rectangular
/// shapes exist only for the off-diagonal blocks of a 2x2 partition.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  explicit ComplexMatrix(std::size_t n) : ComplexMatrix(n, n) {}

  /// Builds from nested rows; all rows must have equal length and every
  /// entry must be finite.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// Row-major real and imaginary parts, both of length rows*cols.
  static ComplexMatrix from_parts(std::size_t rows, std::size_t cols, std::span<const double> re,
                                  std::span<const double> im);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// Dimension of a square matrix.
  std::size_t n() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<Complex> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const noexcept {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& src);

  double frobenius_norm() const noexcept;
  double max_abs() const noexcept;
  bool all_finite() const noexcept;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
/// Matrix product through the dispatched SIMD kernel.
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product through the scalar reference kernel only. Results are
/// identical on every host, which the seeded generators rely on.
ComplexMatrix multiply_reference(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖A − B‖_F.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// ‖A − A*‖_F.
double hermitian_defect(const ComplexMatrix& a);

/// (A + A*)/2, Hermitian to the last bit.
ComplexMatrix hermitian_part(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, const char* what);
void require_same_dimension(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);

}  // namespace sectoria
