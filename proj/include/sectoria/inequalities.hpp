#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sectoria/generators.hpp"
#include "sectoria/matrix.hpp"
#include "sectoria/report.hpp"
#include "sectoria/schur.hpp"
#include "sectoria/sector.hpp"

namespace sectoria {

// Every checker returns a signed-slack report and throws MathError when its
// hypothesis fails. Scalar slack is (lhs − rhs)/max(|lhs|, |rhs|, 1);
// Loewner slack is λ_min(lhs − rhs)/‖lhs‖_F.

/// Tolerance used when an explicitly supplied α is checked with in_sector.
inline constexpr double kMembershipTol = 1e-9;

/// det(A+B) ≥ det A + det B for positive definite A, B.
InequalityReport check_det_superadditivity(const ComplexMatrix& a, const ComplexMatrix& b,
                                           double tol = kDefaultTolerance);

/// det(A+B) ≥ (1 + Σ det B_k/det A_k) det A + (1 + Σ det A_k/det B_k) det B.
InequalityReport check_haynsworth(const ComplexMatrix& a, const ComplexMatrix& b,
                                  double tol = kDefaultTolerance);

/// Haynsworth's bound plus (2ⁿ − 2n)√(det A det B).
InequalityReport check_hartfiel(const ComplexMatrix& a, const ComplexMatrix& b,
                                double tol = kDefaultTolerance);

/// The three nested lower bounds for det(A+B) on a positive definite pair and
/// the scalar slacks between consecutive members of the chain.
struct RefinementChain {
  double det_sum = 0.0;         // det(A+B)
  double superadditive = 0.0;   // det A + det B
  double haynsworth = 0.0;
  double hartfiel = 0.0;
  double haynsworth_over_superadditive = 0.0;
  double hartfiel_over_haynsworth = 0.0;
  double det_sum_over_hartfiel = 0.0;
};

RefinementChain refinement_chain(const ComplexMatrix& a, const ComplexMatrix& b);

/// (A+B)/(A₁₁+B₁₁) ⪰ A/A₁₁ + B/B₁₁ for positive definite A, B.
InequalityReport check_schur_pd(const ComplexMatrix& a, const ComplexMatrix& b,
                                const BlockPartition& part, double tol = kDefaultTolerance);

/// (Re A)⁻¹ ⪰ Re(A⁻¹) when Re A ≻ 0.
InequalityReport check_inverse_real_part(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// Re(A/A₁₁) ⪰ (Re A)/(Re A₁₁) when Re A ≻ 0.
InequalityReport check_schur_real_part(const ComplexMatrix& a, const BlockPartition& part,
                                       double tol = kDefaultTolerance);

/// secⁿ(α) det(Re A) ≥ |det A|. α defaults to sector_angle(A); an explicit α
/// is verified with in_sector.
InequalityReport check_ostrowski_taussky_complement(const ComplexMatrix& a,
                                                    std::optional<SectorAngle> alpha = {},
                                                    double tol = kDefaultTolerance);

/// Partial products of the descending eigenvalues of sec(α) Re A dominate
/// those of the descending singular values of A, for every k. Slack is the
/// minimum over k.
InequalityReport check_weak_log_majorization(const ComplexMatrix& a,
                                             std::optional<SectorAngle> alpha = {},
                                             double tol = kDefaultTolerance);

/// sec²(α)(Re A)/(Re A₁₁) ⪰ Re(A/A₁₁).
InequalityReport check_claim1(const ComplexMatrix& a, const BlockPartition& part,
                              std::optional<SectorAngle> alpha = {},
                              double tol = kDefaultTolerance);

/// sec²(α) Re((A+B)/(A₁₁+B₁₁)) ⪰ Re(A/A₁₁) + Re(B/B₁₁) for A, B in S_α.
InequalityReport check_main1(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                             const BlockPartition& part, double tol = kDefaultTolerance);

/// The unscaled variant Re((A+B)/(A₁₁+B₁₁)) ⪰ Re(A/A₁₁) + Re(B/B₁₁), which
/// is false in general. Requires Re A, Re B ≻ 0.
InequalityReport check_schur_wrongsec(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const BlockPartition& part,
                                      double tol = kDefaultTolerance);

/// Counterexamples must reach this normalized slack to count.
inline constexpr double kCounterexampleThreshold = 1e-6;

struct FalsificationResult {
  InequalityReport worst;
  std::size_t worst_trial = 0;
  std::size_t trials = 0;
  bool counterexample_found = false;
  std::vector<double> slacks;  // by trial index
};

/// For each trial t, A = gen_sectorial(n, α, RngStream(seed, t)) and B = A*;
/// keeps the most negative slack (lowest trial index on ties). The result is
/// independent of `workers`.
FalsificationResult falsify_schur_wrongsec(const TrialConfig& config,
                                           double tol = kDefaultTolerance,
                                           unsigned workers = 1);

/// sec³(α)|det(A_{k+1}+B_{k+1})/det(A_k+B_k)| ≥ |det A_{k+1}/det A_k| + |det B_{k+1}/det B_k|
/// for 1 ≤ k ≤ n−1.
InequalityReport check_det_step(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                                std::size_t k, double tol = kDefaultTolerance);

/// check_det_step for every k; the report carries the minimum slack.
InequalityReport check_det_step_all(const ComplexMatrix& a, const ComplexMatrix& b,
                                    SectorAngle alpha, double tol = kDefaultTolerance);

/// sec^{3n−2}(α)|det(A+B)| ≥ (1 + Σ|det B_k/det A_k|)|det A|
///   + (1 + Σ|det A_k/det B_k|)|det B| + (2ⁿ − 2n)√|det A det B|.
InequalityReport check_main2(const ComplexMatrix& a, const ComplexMatrix& b, SectorAngle alpha,
                             double tol = kDefaultTolerance);

/// check_main2's right-hand side with the constant 2^{3n/2−1} for
/// accretive-dissipative A, B.
InequalityReport check_corollary_ad(const ComplexMatrix& a, const ComplexMatrix& b,
                                    double tol = kDefaultTolerance);

struct CorollaryConstant {
  double sec_power = 0.0;    // sec^{3n−2}(π/4)
  double power_of_two = 0.0; // 2^{3n/2−1}
  double relative_gap = 0.0;
};

CorollaryConstant corollary_ad_constant(std::size_t n);

bool is_accretive_dissipative(const ComplexMatrix& a);

}  // namespace sectoria
