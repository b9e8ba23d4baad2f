#include "sectoria/kernels.hpp"

namespace sectoria::kernels::scalar {

namespace {

// Explicit real arithmetic keeps the reference free of the library's
// NaN-recovery branches in complex operator*.
inline Complex mul(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += mul(a, x[i]);
}

void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = mul(a, xi) + mul(b, yi);
    y[i] = mul(c, xi) + mul(d, yi);
  }
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void gemm(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c) {
  c = ComplexMatrix(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(a(i, k), b.row(k), out);
  }
}

}  // namespace sectoria::kernels::scalar
