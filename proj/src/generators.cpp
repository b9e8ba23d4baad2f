#include "sectoria/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/linalg.hpp"

namespace sectoria {

void TrialConfig::validate() const {
  if (trials < 1) throw MathError(ErrorKind::InvalidArgument, "trials must be >= 1");
  if (n < 1) throw MathError(ErrorKind::InvalidArgument, "n must be >= 1");
  if (partition && (*partition < 1 || *partition + 1 > n)) {
    throw MathError(ErrorKind::InvalidArgument,
                    "partition " + std::to_string(*partition) + " outside [1, n-1]");
  }
  if (!(alpha.radians() < std::numbers::pi / 2.0 - kGeneratorAngleGuard)) {
    throw MathError(ErrorKind::InvalidArgument, "alpha must be below pi/2 - 0.01");
  }
}

std::size_t TrialConfig::partition_or_default() const { return partition ? *partition : n / 2; }

namespace {

ComplexMatrix gaussian(std::size_t n, RngStream& rng) {
  ComplexMatrix g(n);
  for (Complex& z : g.data()) z = rng.complex_normal();
  return g;
}

void require_dimension(std::size_t n) {
  if (n < 1) throw MathError(ErrorKind::InvalidArgument, "dimension must be >= 1");
}

void require_generator_angle(SectorAngle alpha) {
  if (!(alpha.radians() < std::numbers::pi / 2.0 - kGeneratorAngleGuard)) {
    throw MathError(ErrorKind::InvalidArgument, "alpha must be below pi/2 - 0.01");
  }
}

}  // namespace

ComplexMatrix gen_positive_definite(std::size_t n, RngStream& rng) {
  require_dimension(n);
  const ComplexMatrix g = gaussian(n, rng);
  ComplexMatrix a = hermitian_part(multiply_reference(g, g.adjoint()));
  for (std::size_t i = 0; i < n; ++i) a(i, i) += 0.1;
  return a;
}

ComplexMatrix gen_positive_definite(std::size_t n, std::uint64_t seed) {
  RngStream rng(seed);
  return gen_positive_definite(n, rng);
}

PlantedSectorial gen_sectorial_planted(std::size_t n, SectorAngle alpha, RngStream& rng) {
  require_dimension(n);
  require_generator_angle(alpha);
  PlantedSectorial out;
  do {
    out.x = gaussian(n, rng);
  } while (singular_values(out.x).back() < kMinFactorSingularValue);

  const double a = alpha.radians();
  out.thetas.resize(n);
  out.thetas[0] = a;
  for (std::size_t j = 1; j < n; ++j) out.thetas[j] = rng.uniform(-a, a);

  ComplexMatrix xz = out.x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xz(i, j) *= std::polar(1.0, out.thetas[j]);
  out.a = multiply_reference(xz, out.x.adjoint());
  return out;
}

ComplexMatrix gen_sectorial(std::size_t n, SectorAngle alpha, RngStream& rng) {
  return gen_sectorial_planted(n, alpha, rng).a;
}

ComplexMatrix gen_sectorial(std::size_t n, SectorAngle alpha, std::uint64_t seed) {
  RngStream rng(seed);
  return gen_sectorial(n, alpha, rng);
}

ComplexMatrix gen_accretive_dissipative(std::size_t n, RngStream& rng) {
  const ComplexMatrix h = gen_positive_definite(n, rng);
  const ComplexMatrix k = gen_positive_definite(n, rng);
  return h + Complex(0.0, 1.0) * k;
}

ComplexMatrix gen_accretive_dissipative(std::size_t n, std::uint64_t seed) {
  RngStream rng(seed);
  return gen_accretive_dissipative(n, rng);
}

std::vector<double> gen_log_uniform_sequence(std::size_t n, double lo, double hi,
                                             RngStream& rng) {
  if (!(lo > 0.0 && hi >= lo)) throw MathError(ErrorKind::InvalidArgument, "log-uniform range");
  std::vector<double> seq(n + 1, 1.0);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (std::size_t k = 1; k <= n; ++k) seq[k] = std::exp(rng.uniform(log_lo, log_hi));
  return seq;
}

}  // namespace sectoria
