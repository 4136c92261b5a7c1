#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "fejer/experiment.hpp"
#include "fejer/kernel.hpp"
#include "fejer/rng.hpp"
#include "fejer/transform.hpp"

namespace fejer {

inline constexpr std::string_view kToolName = "fejer";
inline constexpr std::string_view kToolVersion = "1.0.0";

namespace detail {

// 12 significant digits, '.' decimal separator, no locale dependence.
inline std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::string(buf);
}

inline std::string format_hex64(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return std::string(buf);
}

inline std::string format_u64(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(value));
  return std::string(buf);
}

inline std::string join_radii(const std::vector<long>& radii) {
  std::string out;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(radii[i]);
  }
  return out;
}

inline std::string tool_banner() {
  return std::string(kToolName) + " " + std::string(kToolVersion);
}

inline std::string config_echo(const ExperimentConfig& config) {
  std::string out = "n=" + std::to_string(config.group.value());
  out += " size=" + std::to_string(config.subset_size);
  out += " r=" + join_radii(config.radii);
  out += " trials=" + std::to_string(config.trials);
  out += " seed=" + format_u64(config.seed);
  out += std::string(" format=") + (config.format == OutputFormat::kCsv ? "csv" : "json");
  out += std::string(" interval=") + (config.with_interval_discrepancy ? "on" : "off");
  return out;
}

}  // namespace detail

/// Render trial reports as a text document. CSV: `#` comment header lines
/// (tool version, generator name/version, config echo) followed by one row
/// per (trial, radius); JSON: an object with a `meta` sibling and a
/// `reports` array of flat objects carrying the same field names. All
/// numeric values use 12 significant digits; output is byte-deterministic.
inline std::string emit_report(const std::vector<TrialReport>& reports,
                               const ExperimentConfig& config) {
  if (reports.empty()) {
    throw ParameterError("cannot emit an empty report");
  }
  // rows are emitted sorted by (trial, r) whatever order the radii were given in
  std::vector<const TrialReport*> rows;
  rows.reserve(reports.size());
  for (const TrialReport& row : reports) rows.push_back(&row);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const TrialReport* a, const TrialReport* b) {
                     return a->trial_index != b->trial_index
                                ? a->trial_index < b->trial_index
                                : a->radius < b->radius;
                   });
  std::string out;
  if (config.format == OutputFormat::kCsv) {
    out += "# " + detail::tool_banner() + "\n";
    out += "# rng: " + std::string(kRngName) + " " + std::string(kRngVersion) + "\n";
    out += "# subset_hash: fnv1a64 over sorted members, hex\n";
    out += "# config: " + detail::config_echo(config) + "\n";
    out += "trial,r,subset_hash,observed_sup,theorem_bound,corollary_bound,"
           "effective_constant";
    if (config.with_interval_discrepancy) out += ",interval_discrepancy";
    out += "\n";
    for (const TrialReport* sorted : rows) {
      const TrialReport& row = *sorted;
      out += std::to_string(row.trial_index);
      out += ',';
      out += std::to_string(row.radius);
      out += ',';
      out += detail::format_hex64(row.subset_hash);
      out += ',';
      out += detail::format_double(row.bounds.observed_sup);
      out += ',';
      out += detail::format_double(row.bounds.theorem_bound);
      out += ',';
      out += detail::format_double(row.bounds.corollary_bound);
      out += ',';
      out += detail::format_double(row.bounds.effective_constant);
      if (config.with_interval_discrepancy) {
        out += ',';
        out += detail::format_double(row.interval_discrepancy.value_or(0.0));
      }
      out += '\n';
    }
  } else {
    out += "{\n";
    out += "  \"meta\": {\n";
    out += "    \"tool\": \"" + std::string(kToolName) + "\",\n";
    out += "    \"version\": \"" + std::string(kToolVersion) + "\",\n";
    out += "    \"rng\": \"" + std::string(kRngName) + "\",\n";
    out += "    \"rng_version\": \"" + std::string(kRngVersion) + "\",\n";
    out += "    \"subset_hash\": \"fnv1a64 over sorted members, hex\",\n";
    out += "    \"config\": {\"n\": " + std::to_string(config.group.value()) +
           ", \"size\": " + std::to_string(config.subset_size) + ", \"r\": [" +
           detail::join_radii(config.radii) + "], \"trials\": " +
           std::to_string(config.trials) + ", \"seed\": " +
           detail::format_u64(config.seed) + ", \"format\": \"json\", " +
           "\"interval\": " +
           (config.with_interval_discrepancy ? "true" : "false") + "}\n";
    out += "  },\n";
    out += "  \"reports\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const TrialReport& row = *rows[i];
      out += "    {\"trial\": " + std::to_string(row.trial_index);
      out += ", \"r\": " + std::to_string(row.radius);
      out += ", \"subset_hash\": \"" + detail::format_hex64(row.subset_hash) + "\"";
      out += ", \"observed_sup\": " + detail::format_double(row.bounds.observed_sup);
      out += ", \"theorem_bound\": " + detail::format_double(row.bounds.theorem_bound);
      out += ", \"corollary_bound\": " + detail::format_double(row.bounds.corollary_bound);
      out += ", \"effective_constant\": " +
             detail::format_double(row.bounds.effective_constant);
      if (config.with_interval_discrepancy) {
        out += ", \"interval_discrepancy\": " +
               detail::format_double(row.interval_discrepancy.value_or(0.0));
      }
      out += (i + 1 < rows.size()) ? "},\n" : "}\n";
    }
    out += "  ]\n";
    out += "}\n";
  }
  return out;
}

/// Render the kernel and its Fourier multiplier as two aligned tables:
/// residue/value over the whole group, then frequency, closed-form symbol,
/// transform-computed symbol, and their absolute difference.
inline std::string dump_kernel(const KernelSpec& spec, OutputFormat format) {
  const Signal kernel = triangular_kernel(spec);
  const Spectrum transformed = dft(kernel);
  const std::size_t size = spec.group().value();

  std::string out;
  if (format == OutputFormat::kCsv) {
    out += "# " + detail::tool_banner() + "\n";
    out += "# kernel: n=" + std::to_string(size) +
           " r=" + std::to_string(spec.radius()) + "\n";
    out += "n,value\n";
    for (std::size_t n = 0; n < size; ++n) {
      out += std::to_string(n) + ',' + detail::format_double(kernel[n].real()) + "\n";
    }
    out += "\n";
    out += "k,symbol,symbol_dft,abs_error\n";
    for (std::size_t k = 0; k < size; ++k) {
      const double closed = kernel_symbol(spec, k);
      const double error = std::abs(transformed[k] - cplx{closed, 0.0});
      out += std::to_string(k) + ',' + detail::format_double(closed) + ',' +
             detail::format_double(transformed[k].real()) + ',' +
             detail::format_double(error) + "\n";
    }
  } else {
    out += "{\n";
    out += "  \"meta\": {\"tool\": \"" + std::string(kToolName) + "\", \"version\": \"" +
           std::string(kToolVersion) + "\", \"n\": " + std::to_string(size) +
           ", \"r\": " + std::to_string(spec.radius()) + "},\n";
    out += "  \"kernel\": [\n";
    for (std::size_t n = 0; n < size; ++n) {
      out += "    {\"n\": " + std::to_string(n) +
             ", \"value\": " + detail::format_double(kernel[n].real()) +
             (n + 1 < size ? "},\n" : "}\n");
    }
    out += "  ],\n";
    out += "  \"symbol\": [\n";
    for (std::size_t k = 0; k < size; ++k) {
      const double closed = kernel_symbol(spec, k);
      const double error = std::abs(transformed[k] - cplx{closed, 0.0});
      out += "    {\"k\": " + std::to_string(k) +
             ", \"symbol\": " + detail::format_double(closed) +
             ", \"symbol_dft\": " + detail::format_double(transformed[k].real()) +
             ", \"abs_error\": " + detail::format_double(error) +
             (k + 1 < size ? "},\n" : "}\n");
    }
    out += "  ]\n";
    out += "}\n";
  }
  return out;
}

}  // namespace fejer
