#ifndef EHSEC_IO_HPP_
#define EHSEC_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ehsec/config.hpp"
#include "ehsec/sim.hpp"

namespace ehsec {

// Parses a flat JSON scenario. Keys carry their units (…_mw, …_mj, …_s)
// and are converted to SI. Unknown keys, missing keys, wrong types and
// invariant violations throw ConfigError naming the key and, when it
// appears in the text, its line. Slot numbers in fixed_slots are 1-based.
//
// Required: n_sensors n_slots n_frames rate_bps_hz slot_duration_s
//   comm_duration_s noise_dest_mw noise_eve_mw sigma_alpha sigma_beta
//   proc_energy_mj comm_energy_mj initial_battery_mj harvest_rate_mw
//   scheme master_seed
// Optional: fixed_power_mw fixed_slots slot_harvest_mj link_model
//   (comm_energy_mj may also be a per-sensor array)
NetworkConfig parse_config(std::string_view text);
NetworkConfig load_config(const std::filesystem::path& path);

// Inverse of parse_config: parse_config(serialize_config(c)) == c for any
// config produced by parse_config.
std::string serialize_config(const NetworkConfig& config);

// Shortest-safe decimal form used for every numeric CSV field (17
// significant digits).
std::string format_number(double value);

void write_per_frame_csv(const std::filesystem::path& path,
                         const SimResult& result);
void write_summary_csv(const std::filesystem::path& path,
                       const std::vector<SimResult>& results);
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows);

struct RunManifest {
  NetworkConfig config;
  std::string tool_version;
  std::string command;
  double wall_clock_s = 0.0;
  std::vector<std::string> outputs;
  // Sweep axis; empty for single runs.
  std::string sweep_param;
  std::vector<double> sweep_grid;
  std::vector<std::string> sweep_schemes;
};

void write_manifest(const std::filesystem::path& path,
                    const RunManifest& manifest);

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace ehsec

#endif  // EHSEC_IO_HPP_
