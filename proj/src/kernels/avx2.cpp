// Compiled with -mavx2 -mfma. Only reached through the dispatcher after a
// CPUID check, or from tests that check backend_available() first.

#include <immintrin.h>

#include "sectoria/kernels.hpp"

namespace sectoria::kernels::avx2 {

namespace {

// Two interleaved complex doubles per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// s * v for a broadcast complex scalar s = (sr, si).
inline __m256d cmul(__m256d sr, __m256d si, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(sr, v, _mm256_mul_pd(si, swapped));
}

inline Complex cmul1(Complex a, Complex b) noexcept {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) {
  const std::size_t n = y.size();
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(&y[i], _mm256_add_pd(load2(&y[i]), cmul(ar, ai, load2(&x[i]))));
  }
  for (; i < n; ++i) y[i] += cmul1(a, x[i]);
}

void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y) {
  const std::size_t n = x.size();
  const __m256d ar = _mm256_set1_pd(a.real()), ai = _mm256_set1_pd(a.imag());
  const __m256d br = _mm256_set1_pd(b.real()), bi = _mm256_set1_pd(b.imag());
  const __m256d cr = _mm256_set1_pd(c.real()), ci = _mm256_set1_pd(c.imag());
  const __m256d dr = _mm256_set1_pd(d.real()), di = _mm256_set1_pd(d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(&x[i]);
    const __m256d yv = load2(&y[i]);
    store2(&x[i], _mm256_add_pd(cmul(ar, ai, xv), cmul(br, bi, yv)));
    store2(&y[i], _mm256_add_pd(cmul(cr, ci, xv), cmul(dr, di, yv)));
  }
  for (; i < n; ++i) {
    const Complex xi = x[i];
    const Complex yi = y[i];
    x[i] = cmul1(a, xi) + cmul1(b, yi);
    y[i] = cmul1(c, xi) + cmul1(d, yi);
  }
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
  const std::size_t n = x.size();
  // Accumulate x.re*y and x.im*swap(y) separately, combine at the end:
  // re = Σ xr*yr + xi*yi, im = Σ xr*yi - xi*yr.
  __m256d acc_direct = _mm256_setzero_pd();
  __m256d acc_swapped = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(&x[i]);
    const __m256d yv = load2(&y[i]);
    acc_direct = _mm256_fmadd_pd(xv, yv, acc_direct);  // [xr*yr, xi*yi, ...]
    acc_swapped = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_swapped);  // [xr*yi, xi*yr]
  }
  alignas(32) double direct[4];
  alignas(32) double swapped[4];
  _mm256_store_pd(direct, acc_direct);
  _mm256_store_pd(swapped, acc_swapped);
  double re = direct[0] + direct[1] + direct[2] + direct[3];
  double im = (swapped[0] - swapped[1]) + (swapped[2] - swapped[3]);
  for (; i < n; ++i) {
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

}  // namespace sectoria::kernels::avx2
