#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sectoria/errors.hpp"
#include "sectoria/generators.hpp"
#include "sectoria/linalg.hpp"
#include "sectoria/schur.hpp"
#include "sectoria/sector.hpp"
#include "test_support.hpp"

using namespace sectoria;
using std::numbers::pi;

namespace {

// Largest |arg x*Ax| over a dense sweep of 2-vectors (cos t, e^{iφ} sin t).
double sweep_max_argument(const ComplexMatrix& a, int grid) {
  double best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    const double t = 0.5 * pi * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double phi = 2.0 * pi * j / grid;
      const std::vector<Complex> x = {std::cos(t), std::polar(std::sin(t), phi)};
      const Complex z = test::quadratic_form(a, x);
      if (std::abs(z) > 1e-12) best = std::max(best, std::abs(std::arg(z)));
    }
  }
  return best;
}

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

}  // namespace

TEST_CASE("SectorAngle domain") {
  CHECK_NOTHROW(SectorAngle(0.0));
  CHECK_NOTHROW(SectorAngle(pi / 2 - 1e-6));
  CHECK_THROWS_AS(SectorAngle(pi / 2), MathError);
  CHECK_THROWS_AS(SectorAngle(-0.1), MathError);
  CHECK(SectorAngle(pi / 3).sec() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("in_sector examples") {
  const ComplexMatrix pd = gen_positive_definite(4, 5);
  for (double a : {0.0, 0.3, 1.2}) CHECK(in_sector(pd, SectorAngle(a), 1e-9).inside);

  const SectorMembership scalar = in_sector(ComplexMatrix{{std::polar(1.0, pi / 3)}}, SectorAngle(pi / 4), 1e-9);
  CHECK_FALSE(scalar.inside);
  CHECK(scalar.margin < 0.0);
  REQUIRE(scalar.witness.size() == 1);

  // W([[1,2],[0,1]]) is the closed disk of radius 1 about 1; it touches 0.
  const ComplexMatrix jordan{{1, 2}, {0, 1}};
  CHECK(sweep_max_argument(jordan, 400) > pi / 3 + 0.1);
  const SectorMembership m = in_sector(jordan, SectorAngle(pi / 3), 1e-9);
  CHECK_FALSE(m.inside);
  // The witness vector realizes a point of W(A) outside the sector.
  const Complex w = test::quadratic_form(jordan, m.witness);
  CHECK((w.real() <= 1e-12 || std::abs(std::arg(w)) > pi / 3));
}

TEST_CASE("sectorial_decompose examples") {
  SUBCASE("identity") {
    const SectorialDecomposition d = sectorial_decompose(ComplexMatrix::identity(3));
    for (double t : d.thetas) CHECK(t == 0.0);
    CHECK(frobenius_distance(d.x * d.x.adjoint(), ComplexMatrix::identity(3)) <= 1e-14);
  }
  SUBCASE("diagonal unitary") {
    const std::vector<Complex> diag = {std::polar(1.0, pi / 6), std::polar(1.0, -pi / 4)};
    const ComplexMatrix a = ComplexMatrix::diagonal(std::span<const Complex>(diag));
    const SectorialDecomposition d = sectorial_decompose(a);
    CHECK(d.thetas[0] == doctest::Approx(pi / 6).epsilon(1e-14));
    CHECK(d.thetas[1] == doctest::Approx(-pi / 4).epsilon(1e-14));
    CHECK(frobenius_distance(d.reconstruct(), a) <= 1e-14);
  }
  SUBCASE("planted factors (seed 3, n=4, alpha=pi/4)") {
    RngStream rng(3);
    const PlantedSectorial p = gen_sectorial_planted(4, SectorAngle(pi / 4), rng);
    const SectorialDecomposition d = sectorial_decompose(p.a);
    CHECK(frobenius_distance(d.reconstruct(), p.a) <= 1e-9 * p.a.frobenius_norm());
    const auto planted = sorted_desc(p.thetas);
    for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(d.thetas[j] - planted[j]) <= 1e-8);
  }
  SUBCASE("not sectorial") {
    try {
      (void)sectorial_decompose(ComplexMatrix{{1, 0}, {0, -1}});
      FAIL("expected NotSectorial");
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::NotSectorial);
    }
  }
}

TEST_CASE("sector_angle examples") {
  CHECK(sector_angle(gen_positive_definite(3, 9)).radians() <= 1e-12);

  const ComplexMatrix ad = gen_accretive_dissipative(4, 21);
  CHECK(sector_angle(std::polar(1.0, -pi / 4) * ad).radians() <= pi / 4);

  // Re A = [[2, 1+i], [1-i, 2]], Im A = I: θ = atan(1/λ_min(Re A)) = atan(1/(2-√2)).
  const ComplexMatrix a{{{2, 1}, {1, 1}}, {{1, -1}, {2, 1}}};
  const double closed_form = std::atan(1.0 / (2.0 - std::sqrt(2.0)));
  CHECK(sector_angle(a).radians() == doctest::Approx(closed_form).epsilon(1e-12));
  CHECK(std::abs(sector_angle_by_bisection(a).radians() - closed_form) <= 1e-8);
  CHECK(std::abs(sweep_max_argument(a, 1500) - closed_form) <= 5e-3);
}

TEST_CASE("numerical_range_boundary examples") {
  for (const Complex& z : numerical_range_boundary(ComplexMatrix::identity(2), 8)) {
    CHECK(z == Complex(1.0, 0.0));
  }
  for (const Complex& z : numerical_range_boundary(ComplexMatrix{{1, 0}, {0, 2}}, 90)) {
    CHECK(std::abs(z.imag()) <= 1e-14);
    CHECK(z.real() >= 1.0 - 1e-14);
    CHECK(z.real() <= 2.0 + 1e-14);
  }
  // Nilpotent shift: W is the closed unit disk. Random sampling never leaves
  // it and gets close to its rim.
  const ComplexMatrix shift{{0, 2}, {0, 0}};
  for (const Complex& z : numerical_range_boundary(shift, 360)) {
    CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);
  }
  RngStream rng(5);
  double sampled_max = 0.0;
  for (int i = 0; i < 20000; ++i) {
    sampled_max = std::max(sampled_max, std::abs(test::quadratic_form(shift, test::random_unit_vector(2, rng))));
  }
  CHECK(sampled_max <= 1.0 + 1e-12);
  CHECK(sampled_max >= 0.99);
  CHECK_THROWS_AS(numerical_range_boundary(shift, 2), MathError);
}

TEST_CASE("congruence of a diagonal unitary stays in the sector") {
  RngStream rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const double alpha = rng.uniform(0.0, 1.4);
    const ComplexMatrix x = test::random_matrix(n, rng);
    std::vector<Complex> z(n);
    for (Complex& v : z) v = std::polar(1.0, rng.uniform(-alpha, alpha));
    const ComplexMatrix a = test::naive_product(
        test::naive_product(x, ComplexMatrix::diagonal(std::span<const Complex>(z))), x.adjoint());
    if (singular_values(x).back() < 1e-3) continue;
    CHECK(in_sector(a, SectorAngle(alpha + 1e-9), 1e-9).inside);
  }
}

TEST_CASE("sector angle inheritance: Schur complement, inverse, principal submatrices") {
  for (std::size_t trial = 0; trial < 500; ++trial) {
    RngStream rng(2024, trial);
    const std::size_t n = 2 + trial % 5;
    const double alpha = rng.uniform(0.0, 1.45);
    const ComplexMatrix a = gen_sectorial(n, SectorAngle(alpha), rng);
    const double parent = sector_angle(a).radians();
    for (std::size_t p = 1; p < n; ++p) {
      CHECK(sector_angle(schur_complement(a, BlockPartition(p, n))).radians() <= parent + 1e-8);
      CHECK(sector_angle(leading_principal_submatrix(a, p)).radians() <= parent + 1e-8);
    }
    CHECK(sector_angle(inverse(a)).radians() <= parent + 1e-8);
  }
}

TEST_CASE("decompose, reconstruct, decompose is stable") {
  for (std::size_t trial = 0; trial < 100; ++trial) {
    RngStream rng(77, trial);
    const ComplexMatrix a = gen_sectorial(2 + trial % 6, SectorAngle(1.0), rng);
    const SectorialDecomposition first = sectorial_decompose(a);
    const SectorialDecomposition second = sectorial_decompose(first.reconstruct());
    for (std::size_t j = 0; j < first.thetas.size(); ++j) {
      CHECK(std::abs(first.thetas[j] - second.thetas[j]) <= 1e-8);
    }
  }
}
