#include "sectoria/claim2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sectoria/errors.hpp"

namespace sectoria {

namespace {

void require_order(std::size_t n) {
  if (n < 1) throw MathError(ErrorKind::InvalidArgument, "subset order must be >= 1");
  if (n > kMaxSubsetOrder) {
    throw MathError(ErrorKind::TooLarge, "subset enumeration capped at n = 20, got " +
                                             std::to_string(n));
  }
}

SubsetMask full_mask(std::size_t n) { return static_cast<SubsetMask>((1ULL << n) - 1); }

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

// products[mask] = ∏_{k∈mask} x_k for every mask of an n-element set.
std::vector<double> subset_products(std::span<const double> x) {
  const std::size_t count = std::size_t{1} << x.size();
  std::vector<double> products(count);
  products[0] = 1.0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    products[mask] = products[mask & (mask - 1)] * x[low];
  }
  return products;
}

}  // namespace

OmegaPartition omega_partition(std::size_t n) {
  require_order(n);
  OmegaPartition out;
  out.n = n;
  const SubsetMask all = full_mask(n);
  out.omega.push_back(0);
  for (std::size_t s = 1; s <= n; ++s) out.omega.push_back(full_mask(s));
  for (std::size_t s = 2; s <= n; ++s) {
    // {s, ..., n}: clear the low s−1 bits.
    out.omega.push_back(all & ~full_mask(s - 1));
  }
  std::vector<SubsetMask> sorted = out.omega;
  std::sort(sorted.begin(), sorted.end());
  for (SubsetMask mask = 0;; ++mask) {
    if (!std::binary_search(sorted.begin(), sorted.end(), mask)) out.omega_prime.push_back(mask);
    if (mask == all) break;
  }
  return out;
}

std::vector<std::size_t> membership_counts(std::span<const SubsetMask> family, std::size_t n) {
  std::vector<std::size_t> counts(n, 0);
  for (SubsetMask mask : family)
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (SubsetMask{1} << k)) ++counts[k];
  return counts;
}

double product_expansion_check(std::span<const double> x) {
  require_order(x.size());
  for (double v : x) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw MathError(ErrorKind::InvalidArgument, "expansion check needs finite x_k >= 0");
    }
  }
  double product = 1.0;
  for (double v : x) product *= 1.0 + v;
  CompensatedSum sum;
  for (double term : subset_products(x)) sum.add(term);
  return std::abs(product - sum.value()) / product;
}

PositiveSequencePair::PositiveSequencePair(std::vector<double> a, std::vector<double> b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.size() != b_.size() || a_.size() < 2) {
    throw MathError(ErrorKind::InvalidArgument, "sequences need equal length n+1 >= 2");
  }
  if (a_[0] != 1.0 || b_[0] != 1.0) {
    throw MathError(ErrorKind::InvalidArgument, "sequences must start with a0 = b0 = 1");
  }
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!(a_[k] > 0.0) || !(b_[k] > 0.0) || !std::isfinite(a_[k]) || !std::isfinite(b_[k])) {
      throw MathError(ErrorKind::InvalidArgument, "sequence entries must be positive and finite");
    }
  }
}

double claim2_lhs(const PositiveSequencePair& pair) {
  const auto a = pair.a();
  const auto b = pair.b();
  double product = 1.0;
  for (std::size_t k = 1; k <= pair.n(); ++k) product *= a[k] / a[k - 1] + b[k] / b[k - 1];
  return product;
}

double claim2_rhs(const PositiveSequencePair& pair) {
  const auto a = pair.a();
  const auto b = pair.b();
  const std::size_t n = pair.n();
  double sum_ba = 1.0;
  double sum_ab = 1.0;
  for (std::size_t s = 1; s < n; ++s) {
    sum_ba += b[s] / a[s];
    sum_ab += a[s] / b[s];
  }
  const double coeff = std::ldexp(1.0, static_cast<int>(n)) - 2.0 * static_cast<double>(n);
  return a[n] * sum_ba + b[n] * sum_ab + coeff * std::sqrt(a[n] * b[n]);
}

InequalityReport check_claim2(const PositiveSequencePair& pair, double tol) {
  return make_scalar_report("claim2", claim2_lhs(pair), claim2_rhs(pair), tol);
}

std::vector<double> claim2_substitution(const PositiveSequencePair& pair) {
  const auto a = pair.a();
  const auto b = pair.b();
  std::vector<double> x(pair.n());
  for (std::size_t k = 1; k <= pair.n(); ++k) x[k - 1] = (a[k - 1] * b[k]) / (b[k - 1] * a[k]);
  return x;
}

AmGmBound claim2_am_gm_bound(std::span<const double> x) {
  if (x.size() < 3) {
    throw MathError(ErrorKind::OmegaPrimeEmpty, "Omega' is empty for n < 3");
  }
  require_order(x.size());
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw MathError(ErrorKind::InvalidArgument, "AM-GM bound needs positive finite x_k");
    }
  }
  const std::size_t n = x.size();
  const OmegaPartition part = omega_partition(n);
  const std::vector<double> products = subset_products(x);

  CompensatedSum sum;
  for (SubsetMask mask : part.omega_prime) sum.add(products[mask]);

  // log of ∏_{B∈Ω′} ∏_{k∈B} x_k via per-element multiplicities.
  const std::vector<std::size_t> counts = membership_counts(part.omega_prime, n);
  double log_total = 0.0;
  double log_all = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    log_total += static_cast<double>(counts[k]) * std::log(x[k]);
    log_all += std::log(x[k]);
  }
  const double size = static_cast<double>(part.omega_prime.size());

  AmGmBound out;
  out.lhs = sum.value();
  out.rhs = size * std::exp(log_total / size);
  out.closed_form = (std::ldexp(1.0, static_cast<int>(n)) - 2.0 * static_cast<double>(n)) *
                    std::exp(0.5 * log_all);
  return out;
}

}  // namespace sectoria
