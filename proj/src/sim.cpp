#include "ehsec/sim.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ehsec/allocator.hpp"
#include "ehsec/channel.hpp"
#include "ehsec/energy.hpp"
#include "ehsec/rng.hpp"

namespace ehsec {
namespace {

Assignment allocate(const FrameProblem& problem, const NetworkConfig& config,
                    int frame_index) {
  switch (config.scheme) {
    case Scheme::kProposed:
      return solve_exact(problem);
    case Scheme::kFpas:
      return assign_probabilistic(
          problem,
          RandomStream(derive_seed(
              config.master_seed,
              {static_cast<std::uint64_t>(StreamTag::kProbabilisticSlots),
               static_cast<std::uint64_t>(frame_index)})));
    case Scheme::kFpfs:
    case Scheme::kApfs:
      return assign_fixed_slots(problem, config.fixed_slots.value());
  }
  throw std::logic_error("allocate: unknown scheme");
}

}  // namespace

SimResult run(const NetworkConfig& config) {
  validate(config);
  const HarvestSchedule schedule = build_schedule(config);
  const double frame_s = config.frame_duration_s();
  const auto m = static_cast<std::size_t>(config.n_sensors);

  SimResult result;
  result.scheme = config.scheme;
  result.per_frame_packets.reserve(static_cast<std::size_t>(config.n_frames));
  result.per_frame_battery_j.reserve(static_cast<std::size_t>(config.n_frames));
  result.per_frame_throughput.reserve(static_cast<std::size_t>(config.n_frames));
  result.min_causality_slack_j = std::numeric_limits<double>::infinity();

  std::vector<double> battery(m, config.initial_battery_j);
  long total_packets = 0;
  for (int frame = 1; frame <= config.n_frames; ++frame) {
    const ChannelRealization channels = draw_channels(config, frame);
    EnergyState state = open_frame(battery, schedule, config.comm_energy_j);
    const FrameProblem problem =
        build_problem(channels, std::move(state), schedule, config,
                      config.scheme);
    const Assignment assignment = allocate(problem, config, frame);
    if (auto err = check_assignment(problem, assignment)) {
      throw std::logic_error("frame " + std::to_string(frame) + ", scheme " +
                             std::string(to_string(config.scheme)) +
                             ": infeasible assignment: " + *err);
    }
    FrameEnergy energy =
        step_frame(problem.energy, schedule, assignment, config.comm_energy_j);
    result.causality_checks += energy.checks;
    result.min_causality_slack_j =
        std::min(result.min_causality_slack_j, energy.min_slack_j);

    std::vector<int> packets(m);
    for (std::size_t k = 0; k < m; ++k) {
      packets[k] = assignment.packets(static_cast<int>(k));
    }
    const int frame_packets = std::accumulate(packets.begin(), packets.end(), 0);
    total_packets += frame_packets;
    result.per_frame_throughput.push_back(config.rate_bps_hz * frame_packets /
                                          frame_s);
    result.per_frame_packets.push_back(std::move(packets));
    result.per_frame_battery_j.push_back(energy.battery_j);
    battery = std::move(energy.battery_j);
  }
  result.avg_sum_throughput = config.rate_bps_hz *
                              static_cast<double>(total_packets) /
                              (frame_s * config.n_frames);
  result.final_batteries_j = std::move(battery);
  return result;
}

std::string_view to_string(SweepParameter parameter) {
  return parameter == SweepParameter::kRate ? "rate" : "sigma_beta";
}

SweepParameter parse_sweep_parameter(std::string_view name) {
  if (name == "rate") return SweepParameter::kRate;
  if (name == "sigma_beta") return SweepParameter::kSigmaBeta;
  throw ConfigError("param", 0,
                    "param: unknown sweep parameter '" + std::string(name) +
                        "' (expected rate or sigma_beta)");
}

std::vector<SweepRow> run_sweep(const NetworkConfig& config,
                                SweepParameter parameter,
                                const std::vector<double>& grid,
                                const std::vector<Scheme>& schemes) {
  if (grid.empty()) throw ConfigError("grid", 0, "grid: must not be empty");
  if (schemes.empty()) {
    throw ConfigError("schemes", 0, "schemes: must not be empty");
  }

  std::vector<NetworkConfig> points;
  std::vector<SweepRow> rows;
  for (Scheme scheme : schemes) {
    for (double value : grid) {
      NetworkConfig point = config;
      point.scheme = scheme;
      if (parameter == SweepParameter::kRate) {
        point.rate_bps_hz = value;
      } else {
        point.sigma_beta = value;
      }
      validate(point);
      points.push_back(std::move(point));
      rows.push_back({scheme, parameter, value, 0.0});
    }
  }

  std::vector<std::future<double>> pending;
  pending.reserve(points.size());
  for (const NetworkConfig& point : points) {
    pending.push_back(std::async(std::launch::async, [&point] {
      return run(point).avg_sum_throughput;
    }));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].avg_sum_throughput = pending[i].get();
  }
  return rows;
}

}  // namespace ehsec
