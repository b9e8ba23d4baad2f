#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "sectoria/kernels.hpp"
#include "test_support.hpp"

using namespace sectoria;

namespace {

std::vector<Complex> random_vector(std::size_t n, RngStream& rng) {
  std::vector<Complex> v(n);
  for (Complex& z : v) z = rng.complex_normal();
  return v;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("scalar kernels agree with textbook complex arithmetic") {
  RngStream rng(101);
  for (std::size_t n : {0u, 1u, 2u, 3u, 7u, 16u, 33u}) {
    const auto x = random_vector(n, rng);
    auto y = random_vector(n, rng);
    const Complex a = rng.complex_normal();

    auto expected = y;
    for (std::size_t i = 0; i < n; ++i) expected[i] += a * x[i];
    kernels::scalar::axpy(a, x, y);
    CHECK(max_diff(y, expected) <= 1e-14);

    Complex dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += std::conj(x[i]) * y[i];
    CHECK(std::abs(kernels::scalar::dot(x, y) - dot) <= 1e-13 * (1.0 + std::abs(dot)));
  }

  const ComplexMatrix a = test::random_matrix(5, rng);
  const ComplexMatrix b = test::random_matrix(5, rng);
  ComplexMatrix c;
  kernels::scalar::gemm(a, b, c);
  CHECK(test::max_abs_diff(c, test::naive_product(a, b)) <= 1e-13);
}

TEST_CASE("rotate applies the 2x2 mixing elementwise") {
  std::vector<Complex> x = {{1, 0}, {0, 1}, {2, -1}};
  std::vector<Complex> y = {{0, 0}, {1, 1}, {-1, 3}};
  const Complex a{0.5, 0}, b{0, 1}, c{-1, 0}, d{0.25, 0.25};
  std::vector<Complex> ex(3), ey(3);
  for (std::size_t i = 0; i < 3; ++i) {
    ex[i] = a * x[i] + b * y[i];
    ey[i] = c * x[i] + d * y[i];
  }
  kernels::rotate(a, b, c, d, x, y);
  CHECK(max_diff(x, ex) <= 1e-15);
  CHECK(max_diff(y, ey) <= 1e-15);
}

#if defined(SECTORIA_HAVE_AVX2)
TEST_CASE("AVX2 kernels are equivalent to the scalar reference") {
  if (!kernels::backend_available(kernels::Backend::Avx2)) {
    MESSAGE("AVX2/FMA not available on this host; equivalence test skipped");
    return;
  }
  RngStream rng(202);
  for (std::size_t n = 0; n <= 37; ++n) {
    const auto x = random_vector(n, rng);
    const auto y0 = random_vector(n, rng);
    const Complex a = rng.complex_normal();
    const Complex b = rng.complex_normal();
    const Complex c = rng.complex_normal();
    const Complex d = rng.complex_normal();

    auto ys = y0, yv = y0;
    kernels::scalar::axpy(a, x, ys);
    kernels::avx2::axpy(a, x, yv);
    CHECK(max_diff(ys, yv) <= 1e-14);

    auto xs = x, xv = x;
    ys = y0;
    yv = y0;
    kernels::scalar::rotate(a, b, c, d, xs, ys);
    kernels::avx2::rotate(a, b, c, d, xv, yv);
    CHECK(max_diff(xs, xv) <= 1e-14);
    CHECK(max_diff(ys, yv) <= 1e-14);

    const Complex ds = kernels::scalar::dot(x, y0);
    const Complex dv = kernels::avx2::dot(x, y0);
    CHECK(std::abs(ds - dv) <= 1e-13 * (1.0 + static_cast<double>(n)));
  }
  for (std::size_t n : {1u, 2u, 5u, 8u, 13u}) {
    const ComplexMatrix a = test::random_matrix(n, rng);
    const ComplexMatrix b = test::random_matrix(n, rng);
    ComplexMatrix cs, cv;
    kernels::scalar::gemm(a, b, cs);
    kernels::avx2::gemm(a, b, cv);
    CHECK(test::max_abs_diff(cs, cv) <= 1e-13 * static_cast<double>(n));
  }
}
#endif

TEST_CASE("dispatch reports an available backend") {
  CHECK(kernels::backend_available(kernels::active_backend()));
  CHECK(kernels::backend_available(kernels::Backend::Scalar));
}
