#pragma once

// Data-parallel inner loops of the matrix kernel. Each operation has a
// scalar reference and, on x86-64 hosts with AVX2+FMA, a vectorized variant.
// The active variant is chosen once per process from CPUID; setting
// SECTORIA_KERNEL=scalar in the environment pins the reference path.

#include <span>
#include <string_view>

#include "sectoria/matrix.hpp"

namespace sectoria::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend backend) noexcept;

/// Backend used by the dispatching entry points below.
Backend active_backend() noexcept;

/// True when the host CPU can run the given backend.
bool backend_available(Backend backend) noexcept;

/// y += a * x
void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y);

/// (x, y) <- (a*x + b*y, c*x + d*y), elementwise.
void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y);

/// Σ conj(x_i) * y_i
Complex dot(std::span<const Complex> x, std::span<const Complex> y);

/// C = A * B for row-major operands. c must not alias a or b.
void gemm(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);

// Explicit variants, used by the equivalence tests and by callers that need
// host-independent results.
namespace scalar {
void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y);
void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
void gemm(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);
}  // namespace scalar

#if defined(SECTORIA_HAVE_AVX2)
namespace avx2 {
void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y);
void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);
void gemm(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c);
}  // namespace avx2
#endif

}  // namespace sectoria::kernels
