#pragma once

#include <string>
#include <string_view>

#include "sectoria/matrix.hpp"

namespace sectoria {

inline constexpr double kDefaultTolerance = 1e-8;

enum class ReportKind { Loewner, Scalar };

std::string_view to_string(ReportKind kind) noexcept;

/// Outcome of one inequality evaluation. slack is signed and scale-free;
/// holds is exactly slack >= -tol.
struct InequalityReport {
  std::string name;
  ReportKind kind = ReportKind::Scalar;
  double slack = 0.0;
  bool holds = false;
  double tol = kDefaultTolerance;
  std::string detail;
};

/// (lhs − rhs) / max(|lhs|, |rhs|, 1)
double scalar_slack(double lhs, double rhs) noexcept;

/// λ_min(lhs − rhs) / ‖lhs‖_F. The difference must be Hermitian to
/// 1e-10 relative before it is symmetrized and eigensolved.
double loewner_slack(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

InequalityReport make_scalar_report(std::string name, double lhs, double rhs, double tol);
InequalityReport make_loewner_report(std::string name, const ComplexMatrix& lhs,
                                     const ComplexMatrix& rhs, double tol);

/// Single line: "<name> <kind> slack=<v> tol=<v> holds|VIOLATED :: <detail>".
std::string to_text(const InequalityReport& report);

/// JSON object {name, kind, slack, holds, tol, detail}.
std::string to_json(const InequalityReport& report);

/// Shortest decimal that round-trips the double.
std::string format_double(double v);

}  // namespace sectoria
