#include "sectoria/suite.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <limits>
#include <string>

#include "sectoria/claim2.hpp"
#include "sectoria/errors.hpp"
#include "sectoria/inequalities.hpp"
#include "sectoria/schur.hpp"
#include "sectoria/trials.hpp"

namespace sectoria {

namespace {

constexpr std::array<std::string_view, 19> kChecks = {
    "main1",        "main2",     "hartfiel",  "haynsworth",         "schur-pd",
    "lemma-2-4",    "lemma-2-5", "lemma-2-6", "claim1",             "claim2",
    "det-step",     "corollary-ad", "schur-wrongsec", "weak-log-major",
    "det-superadditivity", "inverse-block", "cartesian-schur", "mat92", "det-quotient",
};

constexpr std::array<std::string_view, 8> kPartitioned = {
    "main1", "schur-pd", "lemma-2-5", "claim1", "schur-wrongsec",
    "inverse-block", "cartesian-schur", "det-quotient",
};

constexpr double kSequenceLo = 1e-3;
constexpr double kSequenceHi = 1e3;

// Identity residuals are reported as slack = −residual.
InequalityReport residual_report(std::string name, double residual, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.kind = ReportKind::Scalar;
  r.slack = -residual;
  r.tol = tol;
  r.holds = r.slack >= -tol;
  r.detail = "residual=" + format_double(residual);
  return r;
}

struct TrialOutcome {
  InequalityReport report;
  bool errored = false;
  std::string error;
};

InequalityReport run_one(std::string_view check, const TrialConfig& cfg, std::size_t trial,
                         double tol) {
  RngStream rng(cfg.seed, trial);
  const std::size_t n = cfg.n;
  const SectorAngle alpha = cfg.alpha;
  auto part = [&] { return BlockPartition(cfg.partition_or_default(), n); };
  auto sectorial_pair = [&] {
    ComplexMatrix a = gen_sectorial(n, alpha, rng);
    ComplexMatrix b = gen_sectorial(n, alpha, rng);
    return std::pair{std::move(a), std::move(b)};
  };
  auto pd_pair = [&] {
    ComplexMatrix a = gen_positive_definite(n, rng);
    ComplexMatrix b = gen_positive_definite(n, rng);
    return std::pair{std::move(a), std::move(b)};
  };

  if (check == "det-superadditivity") {
    const auto [a, b] = pd_pair();
    return check_det_superadditivity(a, b, tol);
  }
  if (check == "haynsworth") {
    const auto [a, b] = pd_pair();
    return check_haynsworth(a, b, tol);
  }
  if (check == "hartfiel") {
    const auto [a, b] = pd_pair();
    return check_hartfiel(a, b, tol);
  }
  if (check == "schur-pd") {
    const auto [a, b] = pd_pair();
    return check_schur_pd(a, b, part(), tol);
  }
  if (check == "main1") {
    const auto [a, b] = sectorial_pair();
    return check_main1(a, b, alpha, part(), tol);
  }
  if (check == "main2") {
    const auto [a, b] = sectorial_pair();
    return check_main2(a, b, alpha, tol);
  }
  if (check == "det-step") {
    const auto [a, b] = sectorial_pair();
    return check_det_step_all(a, b, alpha, tol);
  }
  if (check == "corollary-ad") {
    const ComplexMatrix a = gen_accretive_dissipative(n, rng);
    const ComplexMatrix b = gen_accretive_dissipative(n, rng);
    return check_corollary_ad(a, b, tol);
  }
  if (check == "claim2") {
    std::vector<double> a = gen_log_uniform_sequence(n, kSequenceLo, kSequenceHi, rng);
    std::vector<double> b = gen_log_uniform_sequence(n, kSequenceLo, kSequenceHi, rng);
    return check_claim2(PositiveSequencePair(std::move(a), std::move(b)), tol);
  }
  if (check == "schur-wrongsec") {
    const ComplexMatrix a = gen_sectorial(n, alpha, rng);
    return check_schur_wrongsec(a, a.adjoint(), part(), tol);
  }

  const ComplexMatrix a = gen_sectorial(n, alpha, rng);
  if (check == "lemma-2-4") return check_inverse_real_part(a, tol);
  if (check == "lemma-2-5") return check_schur_real_part(a, part(), tol);
  if (check == "lemma-2-6") return check_ostrowski_taussky_complement(a, {}, tol);
  if (check == "claim1") return check_claim1(a, part(), {}, tol);
  if (check == "weak-log-major") return check_weak_log_majorization(a, {}, tol);
  if (check == "inverse-block") {
    return residual_report("inverse-block", inverse_block_identity(a, part()), tol);
  }
  if (check == "cartesian-schur") {
    return residual_report("cartesian-schur", cartesian_schur_identity(a, part()).relative_residual,
                           tol);
  }
  if (check == "det-quotient") {
    return residual_report("det-quotient", determinant_quotient_residual(a, part()), tol);
  }
  if (check == "mat92") return residual_report("mat92", inverse_real_part_identity(a), tol);
  throw MathError(ErrorKind::InvalidArgument, "unknown check '" + std::string(check) + "'");
}

}  // namespace

std::span<const std::string_view> check_names() noexcept { return kChecks; }

bool is_known_check(std::string_view name) noexcept {
  return std::find(kChecks.begin(), kChecks.end(), name) != kChecks.end();
}

bool check_uses_partition(std::string_view name) noexcept {
  return std::find(kPartitioned.begin(), kPartitioned.end(), name) != kPartitioned.end();
}

double median(std::vector<double> values) {
  if (values.empty()) throw MathError(ErrorKind::InvalidArgument, "median of empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

SuiteSummary run_suite(std::string_view check, const TrialConfig& config, double tol,
                       unsigned workers) {
  if (!is_known_check(check)) {
    throw MathError(ErrorKind::InvalidArgument, "unknown check '" + std::string(check) + "'");
  }
  config.validate();
  if (check_uses_partition(check)) BlockPartition(config.partition_or_default(), config.n);
  if (check == "det-step" && config.n < 2) {
    throw MathError(ErrorKind::InvalidArgument, "det-step needs n >= 2");
  }

  const std::vector<TrialOutcome> outcomes =
      run_indexed(config.trials, workers, [&](std::size_t t) {
        TrialOutcome o;
        try {
          o.report = run_one(check, config, t, tol);
        } catch (const MathError& e) {
          o.errored = true;
          o.error = "trial " + std::to_string(t) + ": " + e.what();
        }
        return o;
      });

  SuiteSummary s;
  s.check = std::string(check);
  s.trials = outcomes.size();
  s.config = config;
  if (check_uses_partition(check)) s.partition = config.partition_or_default();

  std::vector<double> slacks;
  slacks.reserve(outcomes.size());
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < outcomes.size(); ++t) {
    const TrialOutcome& o = outcomes[t];
    if (o.errored) {
      ++s.errors;
      ++s.failures;
      if (s.first_error.empty()) s.first_error = o.error;
      continue;
    }
    if (!o.report.holds) ++s.failures;
    slacks.push_back(o.report.slack);
    if (o.report.slack < worst) {
      worst = o.report.slack;
      s.worst_trial = t;
    }
  }
  if (!slacks.empty()) {
    s.min_slack = worst;
    s.median_slack = median(slacks);
  } else {
    s.min_slack = s.median_slack = std::numeric_limits<double>::quiet_NaN();
  }
  if (check == "schur-wrongsec") {
    s.counterexample_found = !slacks.empty() && s.min_slack <= -kCounterexampleThreshold;
  } else {
    s.worst_trial.reset();
  }
  return s;
}

bool suite_passed(const SuiteSummary& summary) noexcept {
  if (summary.counterexample_found) return *summary.counterexample_found;
  return summary.failures == 0;
}

std::string to_json(const SuiteSummary& s) {
  nlohmann::ordered_json j;
  j["check"] = s.check;
  j["trials"] = s.trials;
  j["failures"] = s.failures;
  j["errors"] = s.errors;
  j["min_slack"] = s.min_slack;
  j["median_slack"] = s.median_slack;
  nlohmann::ordered_json cfg;
  cfg["seed"] = s.config.seed;
  cfg["n"] = s.config.n;
  cfg["alpha"] = s.config.alpha.radians();
  cfg["partition"] = s.partition ? nlohmann::ordered_json(*s.partition) : nlohmann::ordered_json();
  j["config"] = std::move(cfg);
  if (s.counterexample_found) {
    j["counterexample_found"] = *s.counterexample_found;
    j["worst_trial"] = s.worst_trial ? nlohmann::ordered_json(*s.worst_trial) : nlohmann::ordered_json();
  }
  if (!s.first_error.empty()) j["first_error"] = s.first_error;
  return j.dump();
}

}  // namespace sectoria
