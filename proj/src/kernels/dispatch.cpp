#include <cstdlib>
#include <string_view>

#include "sectoria/kernels.hpp"

namespace sectoria::kernels {

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

bool backend_available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(SECTORIA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

namespace {

struct Table {
  Backend backend;
  void (*axpy)(Complex, std::span<const Complex>, std::span<Complex>);
  void (*rotate)(Complex, Complex, Complex, Complex, std::span<Complex>, std::span<Complex>);
  Complex (*dot)(std::span<const Complex>, std::span<const Complex>);
  void (*gemm)(const ComplexMatrix&, const ComplexMatrix&, ComplexMatrix&);
};

Table select() noexcept {
  const char* forced = std::getenv("SECTORIA_KERNEL");
  const bool pin_scalar = forced != nullptr && std::string_view(forced) == "scalar";
#if defined(SECTORIA_HAVE_AVX2)
  if (!pin_scalar && backend_available(Backend::Avx2)) {
    return {Backend::Avx2, &avx2::axpy, &avx2::rotate, &avx2::dot, &avx2::gemm};
  }
#else
  (void)pin_scalar;
#endif
  return {Backend::Scalar, &scalar::axpy, &scalar::rotate, &scalar::dot, &scalar::gemm};
}

const Table& table() noexcept {
  static const Table t = select();
  return t;
}

}  // namespace

Backend active_backend() noexcept { return table().backend; }

void axpy(Complex a, std::span<const Complex> x, std::span<Complex> y) { table().axpy(a, x, y); }

void rotate(Complex a, Complex b, Complex c, Complex d, std::span<Complex> x,
            std::span<Complex> y) {
  table().rotate(a, b, c, d, x, y);
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) { return table().dot(x, y); }

void gemm(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& c) {
  table().gemm(a, b, c);
}

}  // namespace sectoria::kernels
