// Command-line front end: single runs, parameter sweeps and the solver
// oracle check.
//
//   ehsec run    --config <path> --out <dir>
//   ehsec sweep  --config <path> --param rate|sigma_beta --grid 1,2,3
//                --schemes proposed,fpas --out <dir>
//   ehsec verify --instances <n> --seed <s>
//
// Exit status: 0 success, 1 invalid input, 2 internal consistency failure.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ehsec/energy.hpp"
#include "ehsec/instances.hpp"
#include "ehsec/io.hpp"
#include "ehsec/sim.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitInternal = 2;

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += ' ';
    out += argv[i];
  }
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_run(const fs::path& config_path, const fs::path& out_dir,
            const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  const ehsec::NetworkConfig config = ehsec::load_config(config_path);
  const ehsec::SimResult result = ehsec::run(config);

  fs::create_directories(out_dir);
  ehsec::write_per_frame_csv(out_dir / "per_frame.csv", result);
  ehsec::write_summary_csv(out_dir / "summary.csv", {result});

  ehsec::RunManifest manifest;
  manifest.config = config;
  manifest.tool_version = std::string(ehsec::kToolVersion);
  manifest.command = command;
  manifest.outputs = {"per_frame.csv", "summary.csv"};
  manifest.wall_clock_s = seconds_since(start);
  ehsec::write_manifest(out_dir / "manifest.json", manifest);

  std::cout << ehsec::to_string(config.scheme) << ": avg_sum_throughput "
            << ehsec::format_number(result.avg_sum_throughput)
            << " bits/s/Hz over " << config.n_frames << " frames\n";
  return 0;
}

int cmd_sweep(const fs::path& config_path, const std::string& param,
              const std::vector<double>& grid,
              const std::vector<std::string>& scheme_names,
              const fs::path& out_dir, const std::string& command) {
  const auto start = std::chrono::steady_clock::now();
  const ehsec::NetworkConfig config = ehsec::load_config(config_path);
  const ehsec::SweepParameter parameter = ehsec::parse_sweep_parameter(param);
  std::vector<ehsec::Scheme> schemes;
  for (const std::string& name : scheme_names) {
    auto scheme = ehsec::parse_scheme(name);
    if (!scheme) {
      throw ehsec::ConfigError("schemes", 0,
                               "schemes: unknown scheme '" + name + "'");
    }
    schemes.push_back(*scheme);
  }

  const auto rows = ehsec::run_sweep(config, parameter, grid, schemes);
  fs::create_directories(out_dir);
  ehsec::write_sweep_csv(out_dir / "sweep.csv", rows);

  ehsec::RunManifest manifest;
  manifest.config = config;
  manifest.tool_version = std::string(ehsec::kToolVersion);
  manifest.command = command;
  manifest.outputs = {"sweep.csv"};
  manifest.sweep_param = param;
  manifest.sweep_grid = grid;
  manifest.sweep_schemes = scheme_names;
  manifest.wall_clock_s = seconds_since(start);
  ehsec::write_manifest(out_dir / "manifest.json", manifest);

  std::cout << "wrote " << rows.size() << " rows to "
            << (out_dir / "sweep.csv").string() << '\n';
  return 0;
}

int cmd_verify(int instances, std::uint64_t seed) {
  int failures = 0;
  for (int i = 0; i < instances; ++i) {
    const std::uint64_t instance = ehsec::instance_seed(seed, i);
    const ehsec::FrameProblem problem = ehsec::random_problem(instance);
    const ehsec::OracleCheck check = ehsec::compare_with_oracle(problem);
    if (!check.match) {
      ++failures;
      std::cerr << "mismatch: instance " << i << " (instance seed " << instance
                << "): exact " << check.exact_objective << ", brute force "
                << check.bruteforce_objective;
      if (check.infeasibility) std::cerr << ", " << *check.infeasibility;
      std::cerr << '\n';
    }
  }
  std::cout << instances - failures << "/" << instances
            << " instances match the brute-force oracle\n";
  return failures == 0 ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure slot allocation for energy-harvesting sensors"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Simulate the configured scheme");
  run->add_option("--config", config_path, "Scenario JSON")->required();
  run->add_option("--out", out_dir, "Output directory")->required();

  std::string param;
  std::vector<double> grid;
  std::vector<std::string> schemes;
  auto* sweep = app.add_subcommand("sweep", "Sweep rate or sigma_beta");
  sweep->add_option("--config", config_path, "Scenario JSON")->required();
  sweep->add_option("--param", param, "rate or sigma_beta")->required();
  sweep->add_option("--grid", grid, "Comma-separated values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--schemes", schemes, "Comma-separated scheme names")
      ->required()
      ->delimiter(',');
  sweep->add_option("--out", out_dir, "Output directory")->required();

  int instances = 200;
  std::uint64_t seed = 1;
  auto* verify =
      app.add_subcommand("verify", "Check the exact solver against brute force");
  verify->add_option("--instances", instances, "Number of random instances")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Batch seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  const std::string command = join_args(argc, argv);
  try {
    if (*run) return cmd_run(config_path, out_dir, command);
    if (*sweep) {
      return cmd_sweep(config_path, param, grid, schemes, out_dir, command);
    }
    if (*verify) return cmd_verify(instances, seed);
  } catch (const ehsec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ehsec::CausalityViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return 0;
}
