#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fejer/discrepancy.hpp"
#include "fejer/rng.hpp"
#include "fejer/signal.hpp"

namespace fejer {

enum class OutputFormat { kCsv, kJson };

/// One seeded batch: draw `trials` random subsets of the given size and
/// evaluate the smoothing bounds at every radius in `radii`.
struct ExperimentConfig {
  explicit ExperimentConfig(GroupSize n) : group(n) {}

  GroupSize group;
  std::size_t subset_size = 0;
  std::vector<long> radii;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kCsv;
  // Also report the sharp interval discrepancy at max_len = 2r-1 (the kernel
  // support width). Diagnostic column, off by default.
  bool with_interval_discrepancy = false;
};

/// Row of the emitted report: one (trial, radius) evaluation.
struct TrialReport {
  std::size_t trial_index = 0;
  long radius = 0;
  std::uint64_t subset_hash = 0;
  BoundReport bounds;
  std::optional<double> interval_discrepancy;
};

/// Order-independent digest of a subset: iterated multiply-xor (FNV-1a over
/// the 64-bit member values, visited in sorted order).
inline std::uint64_t subset_digest(const SubsetIndicator& subset) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (std::size_t member : subset.members()) {
    h ^= static_cast<std::uint64_t>(member);
    h *= 0x100000001B3ull;
  }
  return h;
}

/// Uniformly random subset of the given size, drawn by a partial
/// Fisher-Yates shuffle of {0, ..., N-1}. The same (N, size, trial_seed)
/// yields the same subset on every platform.
inline SubsetIndicator random_subset(GroupSize group, std::size_t size,
                                     std::uint64_t trial_seed) {
  const std::size_t n = group.value();
  if (size > n) {
    throw ParameterError("subset size " + std::to_string(size) +
                         " exceeds group size " + std::to_string(n));
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  Xoshiro256ss gen(trial_seed);
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(gen.next_below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return SubsetIndicator(group, std::move(pool));
}

namespace detail {

inline void validate(const ExperimentConfig& config) {
  if (config.subset_size > config.group.value()) {
    throw ParameterError("subset size " + std::to_string(config.subset_size) +
                         " exceeds group size " + std::to_string(config.group.value()));
  }
  if (config.radii.empty()) {
    throw ParameterError("at least one radius is required");
  }
  for (long radius : config.radii) {
    KernelSpec check(config.group, radius);  // throws on out-of-range radius
    (void)check;
  }
  if (config.trials < 1) {
    throw ParameterError("trial count must be positive");
  }
}

inline void run_trial(const ExperimentConfig& config, std::size_t trial,
                      std::vector<TrialReport>& reports) {
  const SubsetIndicator subset = random_subset(
      config.group, config.subset_size, mix_seed(config.seed, trial));
  const std::uint64_t digest = subset_digest(subset);
  for (std::size_t i = 0; i < config.radii.size(); ++i) {
    const long radius = config.radii[i];
    TrialReport& row = reports[trial * config.radii.size() + i];
    row.trial_index = trial;
    row.radius = radius;
    row.subset_hash = digest;
    row.bounds = evaluate_bounds(subset, radius);
    if (config.with_interval_discrepancy) {
      row.interval_discrepancy = interval_discrepancy(
          subset, std::min<std::size_t>(2 * static_cast<std::size_t>(radius) - 1,
                                        config.group.value()));
    }
  }
}

}  // namespace detail

/// Run every (trial, radius) evaluation and return the reports sorted by
/// (trial, radius-position). Trials are independent (each derives its own
/// seed), so they may fan out over `threads` workers; each worker writes
/// only its own preallocated rows and the result is identical for every
/// thread count.
///
/// Throws std::logic_error if any row violates the proved worst-case bound;
/// that cannot happen unless the implementation itself is broken.
inline std::vector<TrialReport> run_experiment(const ExperimentConfig& config,
                                               unsigned threads = 1) {
  detail::validate(config);
  std::vector<TrialReport> reports(config.trials * config.radii.size());

  const unsigned workers = std::max(1u,
      std::min<unsigned>(threads, static_cast<unsigned>(config.trials)));
  if (workers == 1) {
    for (std::size_t trial = 0; trial < config.trials; ++trial) {
      detail::run_trial(config, trial, reports);
    }
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> failures(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t trial = w; trial < config.trials; trial += workers) {
            detail::run_trial(config, trial, reports);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : pool) worker.join();
    for (const std::exception_ptr& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  for (const TrialReport& row : reports) {
    if (row.bounds.observed_sup > row.bounds.corollary_bound * (1.0 + 1e-10)) {
      throw std::logic_error(
          "internal invariant violated: observed sup " +
          std::to_string(row.bounds.observed_sup) + " exceeds the proved bound " +
          std::to_string(row.bounds.corollary_bound) + " at trial " +
          std::to_string(row.trial_index) + ", r=" + std::to_string(row.radius));
    }
  }
  return reports;
}

}  // namespace fejer
