#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "fejer/kernel.hpp"
#include "fejer/signal.hpp"
#include "fejer/transform.hpp"

namespace fejer {

/// Subset A of Z/NZ, stored as a sorted list of distinct residues.
/// Empty and full subsets are admitted; every bound below degenerates
/// gracefully for them.
class SubsetIndicator {
 public:
  SubsetIndicator(GroupSize group, std::vector<std::size_t> members)
      : group_(group), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    if (!members_.empty() && members_.back() >= group.value()) {
      throw ParameterError("subset member " + std::to_string(members_.back()) +
                           " out of range for N=" + std::to_string(group.value()));
    }
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
      throw ParameterError("subset members must be distinct");
    }
  }

  GroupSize group() const noexcept { return group_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  SubsetIndicator complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(group_.value() - members_.size());
    std::size_t next = 0;
    for (std::size_t n = 0; n < group_.value(); ++n) {
      if (next < members_.size() && members_[next] == n) {
        ++next;
      } else {
        rest.push_back(n);
      }
    }
    return SubsetIndicator(group_, std::move(rest));
  }

 private:
  GroupSize group_;
  std::vector<std::size_t> members_;
};

/// Observed sup of the smoothed deviation together with the two proved
/// ceilings above it and the dimensionless ratio they normalize.
struct BoundReport {
  double observed_sup = 0.0;       // ||g_A||_inf
  double theorem_bound = 0.0;      // sqrt(5/3) * r^(-1/2) * ||f_A||_2
  double corollary_bound = 0.0;    // sqrt(5/12) * r^(-1/2) * N^(1/2)
  double effective_constant = 0.0; // observed_sup * sqrt(r/N)
};

/// Centered indicator f_A = 1_A - |A|/N. Mean zero by construction.
inline Signal mean_zero_indicator(const SubsetIndicator& subset) {
  const double density =
      static_cast<double>(subset.size()) / static_cast<double>(subset.group().value());
  Signal out(subset.group());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = cplx{-density, 0.0};
  for (std::size_t member : subset.members()) out[member] = cplx{1.0 - density, 0.0};
  return out;
}

/// Squared l2 norm of the centered indicator: |A|(N-|A|)/N. At most N/4.
inline double mean_zero_indicator_l2_squared(std::size_t subset_size, GroupSize group) {
  const std::size_t n = group.value();
  if (subset_size > n) {
    throw ParameterError("subset size " + std::to_string(subset_size) +
                         " exceeds group size " + std::to_string(n));
  }
  const double a = static_cast<double>(subset_size);
  return a * (static_cast<double>(n) - a) / static_cast<double>(n);
}

/// Smoothed deviation g_A = f_A * F_r: the triangular local density of A
/// around each point minus the global density |A|/N.
inline Signal smoothed_deviation(const SubsetIndicator& subset, long radius) {
  const KernelSpec spec(subset.group(), radius);
  return convolve(mean_zero_indicator(subset), triangular_kernel(spec));
}

/// l2 -> sup bound for smoothing by the radius-r kernel:
/// ||f * F_r||_inf <= sqrt(5/3) * r^(-1/2) * ||f||_2 for every f.
inline double l2_to_linf_bound(long radius, double f_l2) {
  if (radius < 1) {
    throw ParameterError("radius must be positive, got " + std::to_string(radius));
  }
  return std::sqrt(5.0 / 3.0) * f_l2 / std::sqrt(static_cast<double>(radius));
}

/// Worst case over all subsets: sqrt(5/12) * r^(-1/2) * N^(1/2). Equals
/// l2_to_linf_bound at the maximal value sqrt(N)/2 of ||f_A||_2.
inline double worst_case_bound(GroupSize group, long radius) {
  if (radius < 1 || static_cast<std::size_t>(radius) > group.half()) {
    throw ParameterError("radius " + std::to_string(radius) + " outside [1, " +
                         std::to_string(group.half()) + "] for N=" +
                         std::to_string(group.value()));
  }
  return std::sqrt(5.0 / 12.0) *
         std::sqrt(static_cast<double>(group.value()) / static_cast<double>(radius));
}

/// Evaluate ||g_A||_inf against both proved bounds and report the effective
/// constant c = ||g_A||_inf * sqrt(r/N), the observed counterpart of the
/// worst-case constant sqrt(5/12) ~= 0.645.
inline BoundReport evaluate_bounds(const SubsetIndicator& subset, long radius) {
  const Signal smoothed = smoothed_deviation(subset, radius);
  const double n = static_cast<double>(subset.group().value());
  const double f_l2 = std::sqrt(mean_zero_indicator_l2_squared(subset.size(), subset.group()));
  BoundReport report;
  report.observed_sup = linf_norm(smoothed);
  report.theorem_bound = l2_to_linf_bound(radius, f_l2);
  report.corollary_bound = worst_case_bound(subset.group(), radius);
  report.effective_constant =
      report.observed_sup * std::sqrt(static_cast<double>(radius) / n);
  return report;
}

/// Sharp (unsmoothed) interval discrepancy: max over cyclic intervals of
/// length 1..max_len of | |A intersect I| - (|A|/N)|I| |. Exhaustive
/// sliding-window enumeration, O(N * max_len). Diagnostic oracle only; no
/// quantitative relation to the smoothed bounds is asserted anywhere.
inline double interval_discrepancy(const SubsetIndicator& subset, std::size_t max_len) {
  const std::size_t size = subset.group().value();
  if (max_len < 1 || max_len > size) {
    throw ParameterError("interval length cap " + std::to_string(max_len) +
                         " outside [1, " + std::to_string(size) + "]");
  }
  std::vector<unsigned char> in_set(size, 0);
  for (std::size_t member : subset.members()) in_set[member] = 1;
  const double density =
      static_cast<double>(subset.size()) / static_cast<double>(size);

  double best = 0.0;
  // counts[a] = |A intersect {a, ..., a+L-1}|, updated as L grows.
  std::vector<std::size_t> counts(size, 0);
  for (std::size_t len = 1; len <= max_len; ++len) {
    const double expected = density * static_cast<double>(len);
    for (std::size_t a = 0; a < size; ++a) {
      std::size_t tail = a + len - 1;
      if (tail >= size) tail -= size;
      counts[a] += in_set[tail];
      best = std::max(best, std::abs(static_cast<double>(counts[a]) - expected));
    }
  }
  return best;
}

}  // namespace fejer
