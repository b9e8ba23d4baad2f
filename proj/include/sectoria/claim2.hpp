#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sectoria/report.hpp"

namespace sectoria {

/// Subsets of {1..n} as bitmasks: bit k−1 set ⇔ k ∈ B.
using SubsetMask = std::uint32_t;

inline constexpr std::size_t kMaxSubsetOrder = 20;

/// Ω = {∅} ∪ {B_s = {1..s} : 1 ≤ s ≤ n} ∪ {B′_s = {s..n} : 2 ≤ s ≤ n} and
/// its complement Ω′ in the power set.
struct OmegaPartition {
  std::size_t n = 0;
  std::vector<SubsetMask> omega;        // ∅, B_1..B_n, B′_2..B′_n
  std::vector<SubsetMask> omega_prime;  // ascending
};

/// Throws TooLarge for n > 20 and InvalidArgument for n = 0.
OmegaPartition omega_partition(std::size_t n);

/// counts[k−1] = number of subsets in `family` containing k.
std::vector<std::size_t> membership_counts(std::span<const SubsetMask> family, std::size_t n);

/// |∏(1 + x_k) − Σ_B ∏_{k∈B} x_k| / ∏(1 + x_k), the subset sum taken with
/// compensated summation. x_k ≥ 0, 1 ≤ n ≤ 20.
double product_expansion_check(std::span<const double> x);

/// Positive sequences a, b of length n+1 with a₀ = b₀ = 1.
class PositiveSequencePair {
 public:
  /// Throws InvalidArgument unless both have equal length ≥ 2, start with 1,
  /// and are strictly positive and finite.
  PositiveSequencePair(std::vector<double> a, std::vector<double> b);

  std::size_t n() const noexcept { return a_.size() - 1; }
  std::span<const double> a() const noexcept { return a_; }
  std::span<const double> b() const noexcept { return b_; }

 private:
  std::vector<double> a_;
  std::vector<double> b_;
};

/// ∏_{k=1}^n (a_k/a_{k−1} + b_k/b_{k−1})
double claim2_lhs(const PositiveSequencePair& pair);

/// a_n(1 + Σ_{s=1}^{n−1} b_s/a_s) + b_n(1 + Σ_{s=1}^{n−1} a_s/b_s) + (2ⁿ − 2n)√(a_n b_n)
double claim2_rhs(const PositiveSequencePair& pair);

InequalityReport check_claim2(const PositiveSequencePair& pair, double tol = kDefaultTolerance);

/// x_k = a_{k−1} b_k / (b_{k−1} a_k), k = 1..n.
std::vector<double> claim2_substitution(const PositiveSequencePair& pair);

struct AmGmBound {
  double lhs = 0.0;          // Σ_{B∈Ω′} ∏_{k∈B} x_k
  double rhs = 0.0;          // |Ω′| (∏_{B∈Ω′} ∏_{k∈B} x_k)^{1/|Ω′|}
  double closed_form = 0.0;  // (2ⁿ − 2n) √(x_1⋯x_n)
};

/// Throws OmegaPrimeEmpty for n < 3 and TooLarge for n > 20.
AmGmBound claim2_am_gm_bound(std::span<const double> x);

}  // namespace sectoria
