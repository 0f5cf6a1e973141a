#include "ehsec/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace ehsec {

double HarvestSchedule::total_j() const {
  return frame_start_harvest_j +
         std::accumulate(slot_harvest_j.begin(), slot_harvest_j.end(), 0.0);
}

HarvestSchedule build_schedule(const NetworkConfig& config) {
  HarvestSchedule schedule;
  schedule.frame_start_harvest_j =
      config.harvest_rate_w * config.slot_duration_s;
  if (config.slot_harvest_j) {
    if (config.slot_harvest_j->size() !=
        static_cast<std::size_t>(config.n_slots)) {
      throw ConfigError("slot_harvest_mj", 0,
                        "slot_harvest_mj: length must equal n_slots");
    }
    schedule.slot_harvest_j = *config.slot_harvest_j;
    return schedule;
  }
  schedule.slot_harvest_j.assign(static_cast<std::size_t>(config.n_slots),
                                 config.harvest_rate_w *
                                     config.slot_duration_s);
  schedule.slot_harvest_j[0] = config.harvest_rate_w * config.comm_duration_s;
  return schedule;
}

EnergyState open_frame(std::vector<double> battery_j,
                       const HarvestSchedule& schedule,
                       std::span<const double> comm_energy_j) {
  if (comm_energy_j.size() != battery_j.size()) {
    throw std::invalid_argument("open_frame: one comm cost per sensor");
  }
  EnergyState state;
  state.eligible.resize(battery_j.size());
  for (std::size_t k = 0; k < battery_j.size(); ++k) {
    state.eligible[k] = battery_j[k] + schedule.frame_start_harvest_j >=
                        comm_energy_j[k] - kEnergyEpsilonJ;
  }
  state.per_slot_cost_j.assign(battery_j.size(),
                               std::numeric_limits<double>::infinity());
  state.battery_j = std::move(battery_j);
  return state;
}

double available_after_beacon(const EnergyState& state,
                              const HarvestSchedule& schedule, int sensor,
                              double comm_cost_j) {
  const auto k = static_cast<std::size_t>(sensor);
  return state.battery_j[k] + schedule.frame_start_harvest_j -
         (state.eligible[k] ? comm_cost_j : 0.0);
}

std::vector<int> slot_quotas(const EnergyState& state,
                             const HarvestSchedule& schedule, int sensor,
                             double comm_cost_j) {
  const auto k = static_cast<std::size_t>(sensor);
  const std::size_t n_slots = schedule.slot_harvest_j.size();
  std::vector<int> quota(n_slots, 0);
  if (!state.eligible[k]) return quota;

  const double cost = state.per_slot_cost_j[k];
  if (!(cost > 0.0)) {
    throw std::invalid_argument("slot_quotas: per-slot cost must be positive");
  }
  double energy = available_after_beacon(state, schedule, sensor, comm_cost_j);
  for (std::size_t l = 0; l < n_slots; ++l) {
    energy += schedule.slot_harvest_j[l];
    // Clamp in floating point before the cast so huge ratios cannot overflow.
    // Half the epsilon keeps quota-feasible spends strictly inside the
    // tolerance that step_frame enforces.
    const double ratio = std::floor((energy + 0.5 * kEnergyEpsilonJ) / cost);
    const double capped = std::clamp(ratio, 0.0, static_cast<double>(l + 1));
    quota[l] = static_cast<int>(capped);
  }
  return quota;
}

FrameEnergy step_frame(const EnergyState& state,
                       const HarvestSchedule& schedule,
                       const Assignment& assignment,
                       std::span<const double> comm_energy_j) {
  const int n_sensors = static_cast<int>(state.battery_j.size());
  const int n_slots = static_cast<int>(schedule.slot_harvest_j.size());
  if (assignment.n_sensors() != n_sensors || assignment.n_slots() != n_slots) {
    throw std::invalid_argument("step_frame: assignment shape mismatch");
  }

  FrameEnergy out;
  out.battery_j.resize(static_cast<std::size_t>(n_sensors));
  out.queue_j.assign(static_cast<std::size_t>(n_sensors),
                     std::vector<double>(static_cast<std::size_t>(n_slots)));
  out.min_slack_j = std::numeric_limits<double>::infinity();

  auto fail = [](int k, int j, double have, double need) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "energy causality violated: sensor " << k + 1 << ", slot " << j + 1
        << ": available " << have << " J, spent " << need << " J";
    throw CausalityViolation(msg.str());
  };

  for (int k = 0; k < n_sensors; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const bool eligible = state.eligible[ks];
    if (!eligible && assignment.packets(k) > 0) {
      fail(k, 0, 0.0, state.per_slot_cost_j[ks]);
    }
    const double beacon = eligible ? comm_energy_j[ks] : 0.0;
    const double cost = state.per_slot_cost_j[ks];

    // Queue recursion and the cumulative prefix form are tracked separately;
    // both must hold.
    double queue = state.battery_j[ks] + schedule.frame_start_harvest_j - beacon;
    double harvested = state.battery_j[ks] + schedule.frame_start_harvest_j;
    double spent = beacon;
    for (int j = 0; j < n_slots; ++j) {
      const auto js = static_cast<std::size_t>(j);
      queue += schedule.slot_harvest_j[js];
      harvested += schedule.slot_harvest_j[js];
      out.queue_j[ks][js] = queue;
      const double drain = assignment.at(k, j) ? cost : 0.0;
      spent += drain;
      const double slack = harvested - spent;
      out.min_slack_j = std::min(out.min_slack_j, slack);
      ++out.checks;
      if (queue - drain < -kEnergyEpsilonJ) fail(k, j, queue, drain);
      if (slack < -kEnergyEpsilonJ) fail(k, j, harvested, spent);
      queue -= drain;
    }
    // Sub-epsilon negatives are rounding residue.
    out.battery_j[ks] = queue < 0.0 ? 0.0 : queue;
  }
  return out;
}

}  // namespace ehsec
