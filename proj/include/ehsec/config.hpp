#ifndef EHSEC_CONFIG_HPP_
#define EHSEC_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ehsec {

// Slot-allocation policy in force for a run.
//   kProposed: minimum secure power, jointly optimal slot assignment.
//   kFpas:     fixed power, random per-slot assignment.
//   kFpfs:     fixed power, fixed slot map.
//   kApfs:     minimum secure power, fixed slot map.
enum class Scheme { kProposed, kFpas, kFpfs, kApfs };

// kWiretap applies the secrecy condition against the eavesdropper link.
// kOutageOnly ignores the eavesdropper and applies the plain outage
// condition on the legitimate link.
enum class LinkModel { kWiretap, kOutageOnly };

std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);
std::string_view to_string(LinkModel model);
std::optional<LinkModel> parse_link_model(std::string_view name);

bool uses_fixed_power(Scheme scheme);
bool uses_fixed_slots(Scheme scheme);

// Static scenario parameters. All physical quantities are SI: Watts,
// Joules, seconds. Sensor and slot indices are zero-based.
struct NetworkConfig {
  int n_sensors = 3;
  int n_slots = 6;
  int n_frames = 1000;

  double rate_bps_hz = 4.0;
  double slot_duration_s = 1.0;
  double comm_duration_s = 2.0;

  double noise_dest_w = 1e-4;
  double noise_eve_w = 1e-3;
  // Scale of the complex fading coefficient; the power gain has mean sigma^2.
  double sigma_alpha = 1.0;
  double sigma_beta = 0.5;

  double proc_energy_j = 0.02;
  // One entry per sensor.
  std::vector<double> comm_energy_j = {0.1, 0.1, 0.1};
  double initial_battery_j = 0.11;
  double harvest_rate_w = 0.01;
  // Explicit per-slot harvest; overrides the harvest-rate schedule when set.
  std::optional<std::vector<double>> slot_harvest_j;

  Scheme scheme = Scheme::kProposed;
  LinkModel link_model = LinkModel::kWiretap;
  std::optional<double> fixed_power_w;
  std::optional<std::vector<std::vector<int>>> fixed_slots;

  std::uint64_t master_seed = 1;

  double frame_duration_s() const {
    return comm_duration_s + n_slots * slot_duration_s;
  }

  bool operator==(const NetworkConfig&) const = default;
};

// Raised for any invalid scenario description. `key` names the offending
// field (empty for document-level problems); `line` is 1-based, 0 if unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, int line, const std::string& what)
      : std::runtime_error(what), key_(std::move(key)), line_(line) {}

  const std::string& key() const { return key_; }
  int line() const { return line_; }

 private:
  std::string key_;
  int line_;
};

// Checks every invariant of `config`, including the scheme-specific baseline
// parameters. Throws ConfigError on the first violation.
void validate(const NetworkConfig& config);

// The three-sensor, six-slot scenario used for the headline experiments.
NetworkConfig reference_scenario(Scheme scheme = Scheme::kProposed);

}  // namespace ehsec

#endif  // EHSEC_CONFIG_HPP_
