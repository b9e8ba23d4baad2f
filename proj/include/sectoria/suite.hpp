#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sectoria/generators.hpp"
#include "sectoria/report.hpp"

namespace sectoria {

/// Stable check names shared by the CLI and the suites.
std::span<const std::string_view> check_names() noexcept;
bool is_known_check(std::string_view name) noexcept;
/// True for checks that act on the ⌊n/2⌋ (or explicit) block split.
bool check_uses_partition(std::string_view name) noexcept;

struct SuiteSummary {
  std::string check;
  std::size_t trials = 0;
  std::size_t failures = 0;  // reports with holds == false, plus precondition errors
  std::size_t errors = 0;    // trials whose checker threw
  double min_slack = 0.0;
  double median_slack = 0.0;
  TrialConfig config;
  std::optional<std::size_t> partition;  // effective split, when the check uses one
  // schur-wrongsec only.
  std::optional<bool> counterexample_found;
  std::optional<std::size_t> worst_trial;
  std::string first_error;
};

/// Runs `check` over config.trials seeded trials; trial t draws its operands
/// from RngStream(config.seed, t). Deterministic for any worker count.
SuiteSummary run_suite(std::string_view check, const TrialConfig& config, double tol,
                       unsigned workers = 1);

/// A suite passes when no trial failed; schur-wrongsec passes when a
/// counterexample was found.
bool suite_passed(const SuiteSummary& summary) noexcept;

std::string to_json(const SuiteSummary& summary);

/// Median of a non-empty sample (mean of the middle pair for even sizes).
double median(std::vector<double> values);

}  // namespace sectoria
