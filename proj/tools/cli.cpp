#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <thread>

#include "sectoria/claim2.hpp"
#include "sectoria/errors.hpp"
#include "sectoria/inequalities.hpp"
#include "sectoria/linalg.hpp"
#include "sectoria/matrix_io.hpp"
#include "sectoria/schur.hpp"
#include "sectoria/sector.hpp"
#include "sectoria/suite.hpp"

namespace sectoria::cli {

namespace {

// Thrown for operand combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(const MathError& e) {
  switch (e.kind()) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotSquare:
    case ErrorKind::NonFinite:
      return kExitUsage;
    default:
      return kExitPrecondition;
  }
}

struct AngleArgs {
  std::string file;
};

struct CheckArgs {
  std::string name;
  std::string file_a;
  std::string file_b;
  std::optional<double> alpha;
  std::optional<std::size_t> partition;
  std::optional<std::size_t> k;
  std::optional<double> tol;
  std::string format = "json";
};

struct TrialsArgs {
  std::string name;
  std::uint64_t seed = 0;
  std::size_t n = 2;
  double alpha = 0.0;
  std::size_t trials = 100;
  std::optional<std::size_t> partition;
  std::optional<double> tol;
  unsigned workers = 0;
};

struct BoundaryArgs {
  std::string file;
  std::size_t points = 360;
  std::string out;
};

int cmd_angle(const AngleArgs& args, std::ostream& out) {
  const ComplexMatrix a = read_matrix_file(args.file);
  const SectorialDecomposition dec = sectorial_decompose(a);
  const SectorAngle alpha = sector_angle(a);
  const SectorAngle bisected = sector_angle_by_bisection(a);
  nlohmann::ordered_json j;
  j["alpha"] = alpha.radians();
  j["alpha_degrees"] = alpha.degrees();
  j["thetas"] = dec.thetas;
  j["bisection_alpha"] = bisected.radians();
  out << j.dump() << '\n';
  return kExitOk;
}

BlockPartition partition_for(const CheckArgs& args, std::size_t n) {
  return BlockPartition(args.partition ? *args.partition : n / 2, n);
}

InequalityReport dispatch_check(const CheckArgs& args, double tol) {
  const std::string& name = args.name;
  if (name == "claim2") return check_claim2(read_sequence_file(args.file_a), tol);

  const ComplexMatrix a = read_matrix_file(args.file_a);
  const bool has_b = !args.file_b.empty();
  auto operand_b = [&]() -> ComplexMatrix {
    if (!has_b) throw UsageError("check '" + name + "' needs a second matrix file");
    return read_matrix_file(args.file_b);
  };
  auto explicit_alpha = [&]() -> std::optional<SectorAngle> {
    if (args.alpha) return SectorAngle(*args.alpha);
    return std::nullopt;
  };
  // Pair checks quantify over a common α; default to the larger operand angle.
  auto pair_alpha = [&](const ComplexMatrix& b) {
    if (args.alpha) return SectorAngle(*args.alpha);
    return std::max(sector_angle(a), sector_angle(b));
  };

  if (name == "det-superadditivity") return check_det_superadditivity(a, operand_b(), tol);
  if (name == "haynsworth") return check_haynsworth(a, operand_b(), tol);
  if (name == "hartfiel") return check_hartfiel(a, operand_b(), tol);
  if (name == "schur-pd") return check_schur_pd(a, operand_b(), partition_for(args, a.n()), tol);
  if (name == "main1") {
    const ComplexMatrix b = operand_b();
    return check_main1(a, b, pair_alpha(b), partition_for(args, a.n()), tol);
  }
  if (name == "main2") {
    const ComplexMatrix b = operand_b();
    return check_main2(a, b, pair_alpha(b), tol);
  }
  if (name == "det-step") {
    const ComplexMatrix b = operand_b();
    if (args.k) return check_det_step(a, b, pair_alpha(b), *args.k, tol);
    return check_det_step_all(a, b, pair_alpha(b), tol);
  }
  if (name == "corollary-ad") return check_corollary_ad(a, operand_b(), tol);
  if (name == "schur-wrongsec") {
    const ComplexMatrix b = has_b ? read_matrix_file(args.file_b) : a.adjoint();
    return check_schur_wrongsec(a, b, partition_for(args, a.n()), tol);
  }
  if (name == "lemma-2-4") return check_inverse_real_part(a, tol);
  if (name == "lemma-2-5") return check_schur_real_part(a, partition_for(args, a.n()), tol);
  if (name == "lemma-2-6") return check_ostrowski_taussky_complement(a, explicit_alpha(), tol);
  if (name == "claim1") return check_claim1(a, partition_for(args, a.n()), explicit_alpha(), tol);
  if (name == "weak-log-major") return check_weak_log_majorization(a, explicit_alpha(), tol);

  auto residual = [&](double r) {
    InequalityReport rep;
    rep.name = name;
    rep.kind = ReportKind::Scalar;
    rep.slack = -r;
    rep.tol = tol;
    rep.holds = rep.slack >= -tol;
    rep.detail = "residual=" + format_double(r);
    return rep;
  };
  if (name == "inverse-block") return residual(inverse_block_identity(a, partition_for(args, a.n())));
  if (name == "cartesian-schur") {
    return residual(cartesian_schur_identity(a, partition_for(args, a.n())).relative_residual);
  }
  if (name == "mat92") return residual(inverse_real_part_identity(a));
  if (name == "det-quotient") {
    return residual(determinant_quotient_residual(a, partition_for(args, a.n())));
  }
  throw UsageError("unknown check '" + name + "'");
}

int cmd_check(const CheckArgs& args, std::ostream& out) {
  if (!is_known_check(args.name)) throw UsageError("unknown check '" + args.name + "'");
  const double tol = args.tol ? *args.tol : default_tolerance();
  const InequalityReport report = dispatch_check(args, tol);
  out << (args.format == "text" ? to_text(report) : to_json(report)) << '\n';
  return report.holds ? kExitOk : kExitViolated;
}

int cmd_trials(const TrialsArgs& args, std::ostream& out) {
  if (!is_known_check(args.name)) throw UsageError("unknown check '" + args.name + "'");
  TrialConfig cfg;
  cfg.seed = args.seed;
  cfg.n = args.n;
  cfg.alpha = SectorAngle(args.alpha);
  cfg.trials = args.trials;
  cfg.partition = args.partition;
  const double tol = args.tol ? *args.tol : default_tolerance();
  const unsigned workers =
      args.workers > 0 ? args.workers : std::max(1u, std::thread::hardware_concurrency());
  const SuiteSummary summary = run_suite(args.name, cfg, tol, workers);
  out << to_json(summary) << '\n';
  return suite_passed(summary) ? kExitOk : kExitViolated;
}

int cmd_boundary(const BoundaryArgs& args, std::ostream& out) {
  const ComplexMatrix a = read_matrix_file(args.file);
  const std::vector<Complex> points = numerical_range_boundary(a, args.points);
  std::string csv = "re,im\n";
  for (const Complex& z : points) csv += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
  if (args.out.empty()) {
    out << csv;
    return kExitOk;
  }
  std::ofstream file(args.out, std::ios::binary);
  if (!file) throw ParseError("cannot write " + args.out);
  file << csv;
  if (!file) throw ParseError("write failed for " + args.out);
  return kExitOk;
}

}  // namespace

double default_tolerance() {
  if (const char* env = std::getenv("SECTORIA_TOL")) {
    const std::string_view text(env);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec == std::errc() && res.ptr == text.data() + text.size() && v >= 0.0) return v;
  }
  return kDefaultTolerance;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sectoria: sectorial matrix analysis and inequality verification"};
  app.name("sectoria");
  app.require_subcommand(1);

  AngleArgs angle;
  auto* angle_cmd = app.add_subcommand("angle", "Sector angle and theta vector of a matrix file");
  angle_cmd->add_option("file", angle.file, "Matrix JSON file")->required();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate one inequality on matrix files");
  check_cmd->add_option("name", check.name, "Check name (see 'sectoria list')")->required();
  check_cmd->add_option("file_a", check.file_a, "First operand (sequence JSON for claim2)")->required();
  check_cmd->add_option("file_b", check.file_b, "Second operand");
  check_cmd->add_option("--alpha", check.alpha, "Sector angle in radians");
  check_cmd->add_option("--partition", check.partition, "Leading block size p");
  check_cmd->add_option("--k", check.k, "det-step index (default: all k)");
  check_cmd->add_option("--tol", check.tol, "Slack tolerance");
  check_cmd->add_option("--format", check.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  TrialsArgs trials;
  auto* trials_cmd = app.add_subcommand("trials", "Run a seeded randomized suite for one check");
  trials_cmd->add_option("name", trials.name, "Check name")->required();
  trials_cmd->add_option("--seed", trials.seed, "Base seed");
  trials_cmd->add_option("--n", trials.n, "Dimension");
  trials_cmd->add_option("--alpha", trials.alpha, "Sector angle in radians");
  trials_cmd->add_option("--trials", trials.trials, "Number of trials");
  trials_cmd->add_option("--partition", trials.partition, "Leading block size p");
  trials_cmd->add_option("--tol", trials.tol, "Slack tolerance");
  trials_cmd->add_option("--workers", trials.workers, "Worker threads (0 = all cores)");

  BoundaryArgs boundary;
  auto* boundary_cmd = app.add_subcommand("boundary", "Export numerical range boundary points as CSV");
  boundary_cmd->add_option("file", boundary.file, "Matrix JSON file")->required();
  boundary_cmd->add_option("--points", boundary.points, "Number of boundary points")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24));
  boundary_cmd->add_option("--out", boundary.out, "CSV output path (default: stdout)");

  auto* list_cmd = app.add_subcommand("list", "List check names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*angle_cmd) return cmd_angle(angle, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*trials_cmd) return cmd_trials(trials, out);
    if (*boundary_cmd) return cmd_boundary(boundary, out);
    if (*list_cmd) {
      for (std::string_view name : check_names()) out << name << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace sectoria::cli
