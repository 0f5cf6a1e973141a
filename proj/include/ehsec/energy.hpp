#ifndef EHSEC_ENERGY_HPP_
#define EHSEC_ENERGY_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "ehsec/assignment.hpp"
#include "ehsec/config.hpp"

namespace ehsec {

// Absolute slack applied at every energy comparison boundary, in Joules.
inline constexpr double kEnergyEpsilonJ = 1e-12;

// Deterministic harvest within a frame. frame_start_harvest_j arrives before
// the CSI/beacon interval; slot_harvest_j[j] arrives at the start of slot j.
struct HarvestSchedule {
  double frame_start_harvest_j = 0.0;
  std::vector<double> slot_harvest_j;

  double total_j() const;
};

// frame_start = P_h * T_s; slot 0 collects P_h * T_c (the CSI/beacon
// interval) and later slots P_h * T_s each. An explicit per-slot array in
// the config replaces the slot amounts verbatim.
HarvestSchedule build_schedule(const NetworkConfig& config);

// Per-sensor energy snapshot at the start of a frame.
struct EnergyState {
  std::vector<double> battery_j;  // carry-over from the previous frame
  std::vector<bool> eligible;     // battery + frame-start harvest covers CSI/beacon cost
  // Energy drained by one active slot (transmit energy plus processing).
  // Infinite when the sensor has no admissible transmit power this frame.
  std::vector<double> per_slot_cost_j;
};

// Builds the frame-start state from carried-over batteries. Costs are left
// infinite; the allocator fills them in for the scheme in force.
EnergyState open_frame(std::vector<double> battery_j,
                       const HarvestSchedule& schedule,
                       std::span<const double> comm_energy_j);

// Energy available to sensor `sensor` before its first data slot:
// battery + frame-start harvest - (eligible ? comm cost : 0).
double available_after_beacon(const EnergyState& state,
                              const HarvestSchedule& schedule, int sensor,
                              double comm_cost_j);

// quota[l] bounds the number of transmissions in slots 0..l:
// floor((available + sum of slot harvests 0..l) / per-slot cost), clamped
// to [0, l + 1]. Ineligible sensors get all zeros.
std::vector<int> slot_quotas(const EnergyState& state,
                             const HarvestSchedule& schedule, int sensor,
                             double comm_cost_j);

// Thrown when an assignment spends energy that has not been harvested yet.
// Reaching this from the simulator means an allocator produced an
// infeasible assignment.
class CausalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FrameEnergy {
  std::vector<double> battery_j;              // carry-over into the next frame
  std::vector<std::vector<double>> queue_j;   // queue level at each slot start
  double min_slack_j = 0.0;                   // tightest causality margin seen
  long checks = 0;                            // prefix inequalities evaluated
};

// Runs the slot-by-slot energy queue for one frame under `assignment` and
// returns the next-frame batteries. Every prefix is checked against the
// cumulative harvest; a violation throws CausalityViolation.
FrameEnergy step_frame(const EnergyState& state,
                       const HarvestSchedule& schedule,
                       const Assignment& assignment,
                       std::span<const double> comm_energy_j);

}  // namespace ehsec

#endif  // EHSEC_ENERGY_HPP_
