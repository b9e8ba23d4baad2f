#include "sectoria/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>

#include "sectoria/errors.hpp"
#include "sectoria/linalg.hpp"

namespace sectoria {

namespace {
constexpr double kSymmetrizationGuard = 1e-10;
}

std::string_view to_string(ReportKind kind) noexcept {
  return kind == ReportKind::Loewner ? "loewner" : "scalar";
}

double scalar_slack(double lhs, double rhs) noexcept {
  return (lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0});
}

double loewner_slack(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  const ComplexMatrix diff = lhs - rhs;
  const double scale = std::max(diff.frobenius_norm(), lhs.frobenius_norm());
  if (hermitian_defect(diff) > kSymmetrizationGuard * scale) {
    throw MathError(ErrorKind::NotHermitian, "Loewner difference is not Hermitian");
  }
  const double norm = lhs.frobenius_norm();
  return min_eigenvalue(hermitian_part(diff)) / (norm > 0.0 ? norm : 1.0);
}

InequalityReport make_scalar_report(std::string name, double lhs, double rhs, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.kind = ReportKind::Scalar;
  r.slack = scalar_slack(lhs, rhs);
  r.tol = tol;
  r.holds = r.slack >= -tol;
  r.detail = "lhs=" + format_double(lhs) + " rhs=" + format_double(rhs);
  return r;
}

InequalityReport make_loewner_report(std::string name, const ComplexMatrix& lhs,
                                     const ComplexMatrix& rhs, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.kind = ReportKind::Loewner;
  r.slack = loewner_slack(lhs, rhs);
  r.tol = tol;
  r.holds = r.slack >= -tol;
  r.detail = "|lhs|_F=" + format_double(lhs.frobenius_norm()) +
             " |rhs|_F=" + format_double(rhs.frobenius_norm()) +
             " dim=" + std::to_string(lhs.n());
  return r;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v + 0.0);
  return std::string(buf, res.ptr);
}

std::string to_text(const InequalityReport& report) {
  return report.name + " " + std::string(to_string(report.kind)) +
         " slack=" + format_double(report.slack) + " tol=" + format_double(report.tol) +
         (report.holds ? " holds" : " VIOLATED") + " :: " + report.detail;
}

std::string to_json(const InequalityReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["kind"] = std::string(to_string(report.kind));
  j["slack"] = report.slack;
  j["holds"] = report.holds;
  j["tol"] = report.tol;
  j["detail"] = report.detail;
  return j.dump();
}

}  // namespace sectoria
