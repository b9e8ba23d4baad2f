#include "sectoria/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sectoria/errors.hpp"
#include "sectoria/linalg.hpp"
#include "sectoria/trials.hpp"

namespace sectoria {

namespace {

double pow2_minus_2n(std::size_t n) {
  return std::ldexp(1.0, static_cast<int>(n)) - 2.0 * static_cast<double>(n);
}

void require_pd_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  require_same_dimension(a, b, what);
  require_positive_definite(a, what);
  require_positive_definite(b, what);
}

void require_accretive(const ComplexMatrix& a, const char* what) {
  if (!is_positive_definite(real_part(a))) {
    throw MathError(ErrorKind::NotAccretive, std::string(what) + " requires Re A > 0");
  }
}

void require_in_sector(const ComplexMatrix& a, SectorAngle alpha, const char* what) {
  const SectorMembership m = in_sector(a, alpha, kMembershipTol);
  if (!m.inside) {
    throw MathError(ErrorKind::NotSectorial,
                    std::string(what) + ": operand not in S_alpha for alpha=" +
                        format_double(alpha.radians()) + " (margin " + format_double(m.margin) +
                        ")");
  }
}

SectorAngle resolve_alpha(const ComplexMatrix& a, std::optional<SectorAngle> alpha,
                          const char* what) {
  if (alpha) {
    require_in_sector(a, *alpha, what);
    return *alpha;
  }
  return sector_angle(a);
}

// |det A_k| (or det A_k for Hermitian input) for k = 0..n with det A_0 = 1.
std::vector<double> leading_minors(const ComplexMatrix& a, bool modulus) {
  std::vector<double> out(a.n() + 1, 1.0);
  for (std::size_t k = 1; k <= a.n(); ++k) {
    const Complex d = determinant(leading_principal_submatrix(a, k));
    out[k] = modulus ? std::abs(d) : d.real();
  }
  return out;
}

// (1 + Σ_{k<n} b_k/a_k) a_n + (1 + Σ_{k<n} a_k/b_k) b_n
double haynsworth_rhs(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size() - 1;
  double sum_ba = 1.0;
  double sum_ab = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    sum_ba += b[k] / a[k];
    sum_ab += a[k] / b[k];
  }
  return sum_ba * a[n] + sum_ab * b[n];
}

double hartfiel_rhs(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size() - 1;
  return haynsworth_rhs(a, b) + pow2_minus_2n(n) * std::sqrt(a[n] * b[n]);
}

ComplexMatrix sec_power_scaled(const ComplexMatrix& m, SectorAngle alpha, int power) {
  return std::pow(alpha.sec(), power) * m;
}

}  // namespace

InequalityReport check_det_superadditivity(const ComplexMatrix& a, const ComplexMatrix& b,
                                           double tol) {
  require_pd_pair(a, b, "det-superadditivity");
  const double lhs = determinant(a + b).real();
  const double rhs = determinant(a).real() + determinant(b).real();
  return make_scalar_report("det-superadditivity", lhs, rhs, tol);
}

InequalityReport check_haynsworth(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_pd_pair(a, b, "haynsworth");
  const std::vector<double> da = leading_minors(a, false);
  const std::vector<double> db = leading_minors(b, false);
  const double lhs = determinant(a + b).real();
  const double rhs = haynsworth_rhs(da, db);
  InequalityReport r = make_scalar_report("haynsworth", lhs, rhs, tol);
  r.detail += " refinement_over_superadditive=" +
              format_double(scalar_slack(rhs, da.back() + db.back()));
  return r;
}

InequalityReport check_hartfiel(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_pd_pair(a, b, "hartfiel");
  const std::vector<double> da = leading_minors(a, false);
  const std::vector<double> db = leading_minors(b, false);
  const double lhs = determinant(a + b).real();
  const double rhs = hartfiel_rhs(da, db);
  InequalityReport r = make_scalar_report("hartfiel", lhs, rhs, tol);
  r.detail += " refinement_over_haynsworth=" + format_double(scalar_slack(rhs, haynsworth_rhs(da, db)));
  return r;
}

RefinementChain refinement_chain(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_pd_pair(a, b, "refinement_chain");
  const std::vector<double> da = leading_minors(a, false);
  const std::vector<double> db = leading_minors(b, false);
  RefinementChain c;
  c.det_sum = determinant(a + b).real();
  c.superadditive = da.back() + db.back();
  c.haynsworth = haynsworth_rhs(da, db);
  c.hartfiel = hartfiel_rhs(da, db);
  c.haynsworth_over_superadditive = scalar_slack(c.haynsworth, c.superadditive);
  c.hartfiel_over_haynsworth = scalar_slack(c.hartfiel, c.haynsworth);
  c.det_sum_over_hartfiel = scalar_slack(c.det_sum, c.hartfiel);
  return c;
}

InequalityReport check_schur_pd(const ComplexMatrix& a, const ComplexMatrix& b,
                                const BlockPartition& part, double tol) {
  require_pd_pair(a, b, "schur-pd");
  const ComplexMatrix lhs = schur_complement(a + b, part);
  const ComplexMatrix rhs = schur_complement(a, part) + schur_complement(b, part);
  return make_loewner_report("schur-pd", lhs, rhs, tol);
}

InequalityReport check_inverse_real_part(const ComplexMatrix& a, double tol) {
  require_square(a, "lemma-2-4");
  require_accretive(a, "lemma-2-4");
  const ComplexMatrix lhs = inverse(real_part(a));
  const ComplexMatrix rhs = real_part(inverse(a));
  return make_loewner_report("lemma-2-4", lhs, rhs, tol);
}

InequalityReport check_schur_real_part(const ComplexMatrix& a, const BlockPartition& part,
                                       double tol) {
  require_square(a, "lemma-2-5");
  require_accretive(a, "lemma-2-5");
  const ComplexMatrix lhs = real_part(schur_complement(a, part));
  const ComplexMatrix rhs = schur_complement(real_part(a), part);
  return make_loewner_report("lemma-2-5", lhs, rhs, tol);
}

InequalityReport check_ostrowski_taussky_complement(const ComplexMatrix& a,
                                                    std::optional<SectorAngle> alpha,
                                                    double tol) {
  require_square(a, "lemma-2-6");
  const SectorAngle angle = resolve_alpha(a, alpha, "lemma-2-6");
  const double lhs =
      std::pow(angle.sec(), static_cast<double>(a.n())) * determinant(real_part(a)).real();
  const double rhs = std::abs(determinant(a));
  InequalityReport r = make_scalar_report("lemma-2-6", lhs, rhs, tol);
  r.detail += " alpha=" + format_double(angle.radians());
  return r;
}

InequalityReport check_weak_log_majorization(const ComplexMatrix& a,
                                             std::optional<SectorAngle> alpha, double tol) {
  require_square(a, "weak-log-major");
  const SectorAngle angle = resolve_alpha(a, alpha, "weak-log-major");
  std::vector<double> lambda = hermitian_eigenvalues(real_part(a));
  std::reverse(lambda.begin(), lambda.end());
  const std::vector<double> sigma = singular_values(a);

  double worst = std::numeric_limits<double>::infinity();
  std::size_t worst_k = 0;
  double lhs_at = 0.0;
  double rhs_at = 0.0;
  double lhs = 1.0;
  double rhs = 1.0;
  for (std::size_t k = 0; k < a.n(); ++k) {
    lhs *= angle.sec() * lambda[k];
    rhs *= sigma[k];
    const double s = scalar_slack(lhs, rhs);
    if (s < worst) {
      worst = s;
      worst_k = k + 1;
      lhs_at = lhs;
      rhs_at = rhs;
    }
  }
  InequalityReport r;
  r.name = "weak-log-major";
  r.kind = ReportKind::Scalar;
  r.slack = worst;
  r.tol = tol;
  r.holds = worst >= -tol;
  r.detail = "worst_k=" + std::to_string(worst_k) + " lhs=" + format_double(lhs_at) +
             " rhs=" + format_double(rhs_at) + " alpha=" + format_double(angle.radians());
  return r;
}

InequalityReport check_claim1(const ComplexMatrix& a, const BlockPartition& part,
                              std::optional<SectorAngle> alpha, double tol) {
  require_square(a, "claim1");
  const SectorAngle angle = resolve_alpha(a, alpha, "claim1");
  const ComplexMatrix lhs =
      sec_power_scaled(schur_complement(real_part(a), part), angle, 2);
  const ComplexMatrix rhs = real_part(schur_complement(a, part));
  InequalityReport r = make_loewner_report("claim1", lhs, rhs, tol);
  r.detail += " alpha=" + format_double(angle.radians());
  return r;
}

InequalityReport check_main1(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                             const BlockPartition& part, double tol) {
  require_same_dimension(a, b, "main1");
  require_in_sector(a, alpha, "main1");
  require_in_sector(b, alpha, "main1");
  const ComplexMatrix lhs = sec_power_scaled(real_part(schur_complement(a + b, part)), alpha, 2);
  const ComplexMatrix rhs =
      real_part(schur_complement(a, part)) + real_part(schur_complement(b, part));
  InequalityReport r = make_loewner_report("main1", lhs, rhs, tol);
  r.detail += " alpha=" + format_double(alpha.radians());
  return r;
}

InequalityReport check_schur_wrongsec(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const BlockPartition& part, double tol) {
  require_same_dimension(a, b, "schur-wrongsec");
  require_accretive(a, "schur-wrongsec");
  require_accretive(b, "schur-wrongsec");
  const ComplexMatrix lhs = real_part(schur_complement(a + b, part));
  const ComplexMatrix rhs =
      real_part(schur_complement(a, part)) + real_part(schur_complement(b, part));
  return make_loewner_report("schur-wrongsec", lhs, rhs, tol);
}

FalsificationResult falsify_schur_wrongsec(const TrialConfig& config, double tol,
                                           unsigned workers) {
  config.validate();
  const BlockPartition part(config.partition_or_default(), config.n);
  std::vector<InequalityReport> reports =
      run_indexed(config.trials, workers, [&](std::size_t t) {
        RngStream rng(config.seed, t);
        const ComplexMatrix a = gen_sectorial(config.n, config.alpha, rng);
        return check_schur_wrongsec(a, a.adjoint(), part, tol);
      });

  FalsificationResult out;
  out.trials = reports.size();
  out.slacks.reserve(reports.size());
  for (std::size_t t = 0; t < reports.size(); ++t) {
    out.slacks.push_back(reports[t].slack);
    if (t == 0 || reports[t].slack < out.worst.slack) {
      out.worst = reports[t];
      out.worst_trial = t;
    }
  }
  out.counterexample_found = out.worst.slack <= -kCounterexampleThreshold;
  out.worst.detail += " trial=" + std::to_string(out.worst_trial) +
                      (out.counterexample_found ? " counterexample" : " NoCounterexampleFound");
  return out;
}

InequalityReport check_det_step(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                                std::size_t k, double tol) {
  require_same_dimension(a, b, "det-step");
  if (k < 1 || k + 1 > a.n()) {
    throw MathError(ErrorKind::IndexOutOfRange,
                    "det-step index " + std::to_string(k) + " outside [1, n-1]");
  }
  require_in_sector(a, alpha, "det-step");
  require_in_sector(b, alpha, "det-step");
  auto det_k = [](const ComplexMatrix& m, std::size_t order) {
    return determinant(leading_principal_submatrix(m, order));
  };
  const ComplexMatrix sum = a + b;
  const double lhs = std::pow(alpha.sec(), 3) * std::abs(det_k(sum, k + 1) / det_k(sum, k));
  const double rhs = std::abs(det_k(a, k + 1) / det_k(a, k)) + std::abs(det_k(b, k + 1) / det_k(b, k));
  InequalityReport r = make_scalar_report("det-step", lhs, rhs, tol);
  r.detail += " k=" + std::to_string(k);
  return r;
}

InequalityReport check_det_step_all(const ComplexMatrix& a, const ComplexMatrix& b,
                                    SectorAngle alpha, double tol) {
  require_same_dimension(a, b, "det-step");
  if (a.n() < 2) throw MathError(ErrorKind::IndexOutOfRange, "det-step needs n >= 2");
  InequalityReport worst;
  for (std::size_t k = 1; k < a.n(); ++k) {
    InequalityReport r = check_det_step(a, b, alpha, k, tol);
    if (k == 1 || r.slack < worst.slack) worst = std::move(r);
  }
  return worst;
}

InequalityReport check_main2(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                             double tol) {
  require_same_dimension(a, b, "main2");
  require_in_sector(a, alpha, "main2");
  require_in_sector(b, alpha, "main2");
  const std::size_t n = a.n();
  const double lhs = std::pow(alpha.sec(), 3.0 * static_cast<double>(n) - 2.0) *
                     std::abs(determinant(a + b));
  const double rhs = hartfiel_rhs(leading_minors(a, true), leading_minors(b, true));
  InequalityReport r = make_scalar_report("main2", lhs, rhs, tol);
  r.detail += " alpha=" + format_double(alpha.radians());
  return r;
}

bool is_accretive_dissipative(const ComplexMatrix& a) {
  if (!a.is_square() || a.n() == 0) return false;
  const CartesianPair parts = cartesian_split(a);
  return is_positive_definite(parts.real_part) && is_positive_definite(parts.imag_part);
}

InequalityReport check_corollary_ad(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  require_same_dimension(a, b, "corollary-ad");
  if (!is_accretive_dissipative(a) || !is_accretive_dissipative(b)) {
    throw MathError(ErrorKind::NotAccretiveDissipative,
                    "corollary-ad requires Re and Im parts positive definite");
  }
  const std::size_t n = a.n();
  const double constant = std::pow(2.0, 1.5 * static_cast<double>(n) - 1.0);
  const double lhs = constant * std::abs(determinant(a + b));
  const double rhs = hartfiel_rhs(leading_minors(a, true), leading_minors(b, true));
  InequalityReport r = make_scalar_report("corollary-ad", lhs, rhs, tol);
  r.detail += " constant=" + format_double(constant);
  return r;
}

CorollaryConstant corollary_ad_constant(std::size_t n) {
  CorollaryConstant c;
  c.sec_power = std::pow(SectorAngle(std::numbers::pi / 4.0).sec(), 3.0 * static_cast<double>(n) - 2.0);
  c.power_of_two = std::pow(2.0, 1.5 * static_cast<double>(n) - 1.0);
  c.relative_gap = std::abs(c.sec_power - c.power_of_two) / c.power_of_two;
  return c;
}

}  // namespace sectoria
