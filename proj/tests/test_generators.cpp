#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sectoria/errors.hpp"
#include "sectoria/generators.hpp"
#include "sectoria/linalg.hpp"
#include "sectoria/sector.hpp"

using namespace sectoria;
using std::numbers::pi;

TEST_CASE("rng streams") {
  RngStream a(1, 4);
  RngStream b(1, 4);
  RngStream c(1, 5);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    differs = differs || x != c.next_u64();
  }
  CHECK(differs);

  RngStream u(3);
  double mean = 0.0;
  double power = 0.0;
  bool in_range = true;
  for (int i = 0; i < 200000; ++i) {
    const double v = u.uniform();
    in_range = in_range && v >= 0.0 && v < 1.0;
    mean += v;
    power += std::norm(u.complex_normal());
  }
  CHECK(in_range);
  CHECK(mean / 200000 == doctest::Approx(0.5).epsilon(0.01));
  CHECK(power / 200000 == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("generators are deterministic in the seed") {
  CHECK(gen_positive_definite(5, 11) == gen_positive_definite(5, 11));
  CHECK(gen_sectorial(5, SectorAngle(0.7), 11) == gen_sectorial(5, SectorAngle(0.7), 11));
  CHECK(gen_accretive_dissipative(5, 11) == gen_accretive_dissipative(5, 11));
  CHECK_FALSE(gen_sectorial(5, SectorAngle(0.7), 11) == gen_sectorial(5, SectorAngle(0.7), 12));
}

TEST_CASE("positive definite generator") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ComplexMatrix p = gen_positive_definite(1 + seed % 8, seed);
    CHECK(hermitian_defect(p) == 0.0);
    CHECK(min_eigenvalue(p) >= 0.09);
  }
}

TEST_CASE("sectorial generator attains its angle") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const double alpha = 1.5 * static_cast<double>(seed) / 200.0;
    const ComplexMatrix a = gen_sectorial(1 + seed % 8, SectorAngle(alpha), seed);
    CHECK(std::abs(sector_angle(a).radians() - alpha) <= 1e-8);
  }
  CHECK_THROWS_AS(gen_sectorial(3, SectorAngle(pi / 2 - 0.005), 1), MathError);
}

TEST_CASE("accretive-dissipative generator") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const ComplexMatrix a = gen_accretive_dissipative(1 + seed % 8, seed);
    CHECK(is_positive_definite(real_part(a)));
    CHECK(is_positive_definite(imag_part(a)));
    CHECK(in_sector(std::polar(1.0, -pi / 4) * a, SectorAngle(pi / 4), 1e-9).inside);
  }
}

TEST_CASE("log-uniform sequences") {
  RngStream rng(4);
  const auto s = gen_log_uniform_sequence(6, 0.5, 2.0, rng);
  REQUIRE(s.size() == 7);
  CHECK(s[0] == 1.0);
  for (std::size_t k = 1; k < s.size(); ++k) CHECK((s[k] >= 0.5 && s[k] <= 2.0));
  CHECK_THROWS_AS(gen_log_uniform_sequence(3, 0.0, 1.0, rng), MathError);
}

TEST_CASE("TrialConfig validation") {
  TrialConfig cfg{.seed = 0, .n = 4, .alpha = SectorAngle(1.0), .trials = 10, .partition = std::nullopt};
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.partition_or_default() == 2);
  cfg.partition = 4;
  CHECK_THROWS_AS(cfg.validate(), MathError);
  cfg.partition = 3;
  CHECK(cfg.partition_or_default() == 3);
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), MathError);
  cfg.trials = 1;
  cfg.alpha = SectorAngle(pi / 2 - 0.005);
  CHECK_THROWS_AS(cfg.validate(), MathError);
}
