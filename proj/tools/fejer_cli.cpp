// Command-line front end: kernel/symbol table dumps and seeded
// random-subset discrepancy experiments with CSV/JSON reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fejer/fejer.hpp"

namespace {

fejer::OutputFormat parse_format(const std::string& name) {
  return name == "json" ? fejer::OutputFormat::kJson : fejer::OutputFormat::kCsv;
}

void write_document(const std::string& document, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << document;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    throw fejer::ParameterError("cannot open output file: " + out_path);
  }
  file << document;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete Fourier analysis on Z/NZ: triangular smoothing "
               "kernel tables and subset discrepancy experiments"};
  app.set_version_flag("--version", std::string(fejer::kToolVersion));
  app.require_subcommand(1);

  std::size_t group_order = 101;
  long kernel_radius = 5;
  std::size_t subset_size = 50;
  std::vector<long> radii = {5, 10, 20};
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::string format = "csv";
  std::string out_path;
  unsigned threads = 1;
  bool with_interval = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write the report to this path (default: stdout)");
  };

  CLI::App* kernel_cmd = app.add_subcommand(
      "kernel", "Dump the triangular kernel and its Fourier multiplier");
  kernel_cmd->add_option("--n", group_order, "Group order N")->required();
  kernel_cmd->add_option("--r", kernel_radius, "Smoothing radius")->required();
  add_common(kernel_cmd);

  CLI::App* symbol_cmd = app.add_subcommand(
      "symbol", "Alias of `kernel`: same kernel/multiplier tables");
  symbol_cmd->add_option("--n", group_order, "Group order N")->required();
  symbol_cmd->add_option("--r", kernel_radius, "Smoothing radius")->required();
  add_common(symbol_cmd);

  CLI::App* experiment_cmd = app.add_subcommand(
      "discrepancy", "Evaluate smoothing bounds on seeded random subsets");
  experiment_cmd->add_option("--n", group_order, "Group order N")->capture_default_str();
  experiment_cmd->add_option("--size", subset_size, "Subset size |A|")
      ->capture_default_str();
  experiment_cmd->add_option("--r", radii, "Smoothing radius (repeatable)")
      ->capture_default_str();
  experiment_cmd->add_option("--trials", trials, "Number of random subsets")
      ->capture_default_str();
  experiment_cmd->add_option("--seed", seed, "Master seed")->capture_default_str();
  experiment_cmd->add_option("--threads", threads,
                             "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  experiment_cmd->add_flag("--interval", with_interval,
                           "Append the sharp interval discrepancy at window 2r-1");
  add_common(experiment_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (kernel_cmd->parsed() || symbol_cmd->parsed()) {
      const fejer::KernelSpec spec(fejer::GroupSize(group_order), kernel_radius);
      write_document(fejer::dump_kernel(spec, parse_format(format)), out_path);
    } else {
      fejer::ExperimentConfig config{fejer::GroupSize(group_order)};
      config.subset_size = subset_size;
      config.radii = radii;
      config.trials = trials;
      config.seed = seed;
      config.format = parse_format(format);
      config.with_interval_discrepancy = with_interval;
      if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
      }
      const std::vector<fejer::TrialReport> reports =
          fejer::run_experiment(config, threads);
      write_document(fejer::emit_report(reports, config), out_path);
    }
  } catch (const fejer::ParameterError& error) {
    std::cerr << "parameter error: " << error.what() << "\n";
    return 2;
  } catch (const std::logic_error& error) {
    std::cerr << "invariant violation: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
