#include "ehsec/config.hpp"

#include <cmath>
#include <set>

namespace ehsec {
namespace {

void require(bool ok, const char* key, const std::string& message) {
  if (!ok) throw ConfigError(key, 0, std::string(key) + ": " + message);
}

void require_nonnegative(double value, const char* key) {
  require(std::isfinite(value) && value >= 0.0, key,
          "must be a finite non-negative number");
}

}  // namespace

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kProposed: return "proposed";
    case Scheme::kFpas: return "fpas";
    case Scheme::kFpfs: return "fpfs";
    case Scheme::kApfs: return "apfs";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::kProposed, Scheme::kFpas, Scheme::kFpfs,
                   Scheme::kApfs}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(LinkModel model) {
  return model == LinkModel::kWiretap ? "wiretap" : "outage_only";
}

std::optional<LinkModel> parse_link_model(std::string_view name) {
  if (name == "wiretap") return LinkModel::kWiretap;
  if (name == "outage_only") return LinkModel::kOutageOnly;
  return std::nullopt;
}

bool uses_fixed_power(Scheme scheme) {
  return scheme == Scheme::kFpas || scheme == Scheme::kFpfs;
}

bool uses_fixed_slots(Scheme scheme) {
  return scheme == Scheme::kFpfs || scheme == Scheme::kApfs;
}

void validate(const NetworkConfig& config) {
  require(config.n_sensors >= 1, "n_sensors", "must be at least 1");
  require(config.n_slots >= 1, "n_slots", "must be at least 1");
  require(config.n_frames >= 1, "n_frames", "must be at least 1");
  require(std::isfinite(config.rate_bps_hz) && config.rate_bps_hz > 0.0,
          "rate_bps_hz", "must be positive");
  require(std::isfinite(config.slot_duration_s) && config.slot_duration_s > 0,
          "slot_duration_s", "must be positive");
  require_nonnegative(config.comm_duration_s, "comm_duration_s");
  require_nonnegative(config.noise_dest_w, "noise_dest_mw");
  require(config.noise_dest_w > 0.0, "noise_dest_mw", "must be positive");
  require_nonnegative(config.noise_eve_w, "noise_eve_mw");
  require(config.noise_eve_w > 0.0, "noise_eve_mw", "must be positive");
  require_nonnegative(config.sigma_alpha, "sigma_alpha");
  require_nonnegative(config.sigma_beta, "sigma_beta");
  require_nonnegative(config.proc_energy_j, "proc_energy_mj");
  require_nonnegative(config.initial_battery_j, "initial_battery_mj");
  require_nonnegative(config.harvest_rate_w, "harvest_rate_mw");

  require(config.comm_energy_j.size() ==
              static_cast<std::size_t>(config.n_sensors),
          "comm_energy_mj", "needs one value per sensor");
  for (double e : config.comm_energy_j) require_nonnegative(e, "comm_energy_mj");

  if (config.slot_harvest_j) {
    require(config.slot_harvest_j->size() ==
                static_cast<std::size_t>(config.n_slots),
            "slot_harvest_mj", "length must equal n_slots");
    for (double e : *config.slot_harvest_j) {
      require_nonnegative(e, "slot_harvest_mj");
    }
  }

  if (config.fixed_power_w) {
    require(std::isfinite(*config.fixed_power_w) && *config.fixed_power_w > 0,
            "fixed_power_mw", "must be positive");
  } else {
    require(!uses_fixed_power(config.scheme), "fixed_power_mw",
            "required by scheme " + std::string(to_string(config.scheme)));
  }

  if (config.fixed_slots) {
    const auto& map = *config.fixed_slots;
    require(map.size() == static_cast<std::size_t>(config.n_sensors),
            "fixed_slots", "needs one slot list per sensor");
    std::set<int> seen;
    for (const auto& slots : map) {
      for (int slot : slots) {
        require(slot >= 0 && slot < config.n_slots, "fixed_slots",
                "slot " + std::to_string(slot + 1) + " is out of range");
        require(seen.insert(slot).second, "fixed_slots",
                "slot " + std::to_string(slot + 1) +
                    " is assigned to more than one sensor");
      }
    }
  } else {
    require(!uses_fixed_slots(config.scheme), "fixed_slots",
            "required by scheme " + std::string(to_string(config.scheme)));
  }
}

NetworkConfig reference_scenario(Scheme scheme) {
  NetworkConfig config;
  config.scheme = scheme;
  config.fixed_power_w = 0.01;
  config.fixed_slots = std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}};
  return config;
}

}  // namespace ehsec
