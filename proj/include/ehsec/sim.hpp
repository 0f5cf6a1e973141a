#ifndef EHSEC_SIM_HPP_
#define EHSEC_SIM_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ehsec/config.hpp"

namespace ehsec {

struct SimResult {
  Scheme scheme = Scheme::kProposed;
  // Packets sent per frame and sensor, frames x sensors.
  std::vector<std::vector<int>> per_frame_packets;
  // Battery after each frame, frames x sensors, Joules.
  std::vector<std::vector<double>> per_frame_battery_j;
  // (R / T_f) * sum of packets in the frame, bits/s/Hz.
  std::vector<double> per_frame_throughput;
  // Mean of per_frame_throughput.
  double avg_sum_throughput = 0.0;
  std::vector<double> final_batteries_j;

  // Energy-causality audit across the whole run.
  long causality_checks = 0;
  double min_causality_slack_j = 0.0;
};

// Simulates config.n_frames frames of the configured scheme. Batteries carry
// over between frames. Channel draws depend only on the master seed, so runs
// of different schemes on one seed see identical fading.
SimResult run(const NetworkConfig& config);

enum class SweepParameter { kRate, kSigmaBeta };

std::string_view to_string(SweepParameter parameter);
// Throws ConfigError for names other than "rate" and "sigma_beta".
SweepParameter parse_sweep_parameter(std::string_view name);

struct SweepRow {
  Scheme scheme;
  SweepParameter parameter;
  double value;
  double avg_sum_throughput;
};

// One run() per (scheme, grid value), all on config.master_seed. Rows come
// back scheme-major in the order given. Runs execute concurrently; the
// output does not depend on scheduling.
std::vector<SweepRow> run_sweep(const NetworkConfig& config,
                                SweepParameter parameter,
                                const std::vector<double>& grid,
                                const std::vector<Scheme>& schemes);

}  // namespace ehsec

#endif  // EHSEC_SIM_HPP_
