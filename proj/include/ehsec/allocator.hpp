#ifndef EHSEC_ALLOCATOR_HPP_
#define EHSEC_ALLOCATOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ehsec/assignment.hpp"
#include "ehsec/channel.hpp"
#include "ehsec/config.hpp"
#include "ehsec/energy.hpp"
#include "ehsec/rng.hpp"

namespace ehsec {

// One frame's slot-assignment instance.
struct FrameProblem {
  // Sensor may be given slots: admissible transmit power exists, the
  // CSI/beacon exchange is affordable, and the sensor holds some energy.
  std::vector<bool> eligible;
  // quotas[k][l] caps the transmissions of sensor k in slots 0..l.
  // Rows of ineligible sensors are zero.
  std::vector<std::vector<int>> quotas;
  // Energy state with per-slot costs set for the scheme in force.
  EnergyState energy;

  int n_sensors() const { return static_cast<int>(quotas.size()); }
  int n_slots() const {
    return quotas.empty() ? 0 : static_cast<int>(quotas.front().size());
  }
};

// Builds the frame instance for `scheme`. Adaptive-power schemes use the
// minimum secure power; fixed-power schemes use config.fixed_power_w and
// admit a sensor only if that power already clears the rate.
FrameProblem build_problem(const ChannelRealization& channels,
                           EnergyState state, const HarvestSchedule& schedule,
                           const NetworkConfig& config, Scheme scheme);

// Instance from explicit eligibility and quotas. Rows of ineligible sensors
// are zeroed. Energy costs are left unset (infinite).
FrameProblem make_problem(std::vector<bool> eligible,
                          std::vector<std::vector<int>> quotas);

// Returns a description of the first violated constraint (shape, per-slot
// exclusivity, eligibility, prefix quota), or nullopt if feasible.
std::optional<std::string> check_assignment(const FrameProblem& problem,
                                            const Assignment& assignment);

// Maximum-cardinality assignment. Among all optimal assignments, returns the
// lexicographically largest in row-major (sensor, slot) order: the lowest
// sensor index takes the earliest slots it can without losing optimality.
Assignment solve_exact(const FrameProblem& problem);

// Largest n_sensors * n_slots accepted by solve_bruteforce.
inline constexpr int kBruteForceMaxCells = 20;

// Exhaustive reference solver with the same tie-breaking as solve_exact.
// Throws std::invalid_argument above kBruteForceMaxCells.
Assignment solve_bruteforce(const FrameProblem& problem);

// Fixed slot map: sensor k may use only slot_map[k] (zero-based), scanned in
// increasing order; a slot that would break a prefix quota stays idle.
Assignment assign_fixed_slots(const FrameProblem& problem,
                              const std::vector<std::vector<int>>& slot_map);

// Random allocation: each slot in turn goes to a uniformly chosen sensor
// among those eligible with quota headroom, or stays idle if none qualifies.
Assignment assign_probabilistic(const FrameProblem& problem,
                                RandomStream stream);

}  // namespace ehsec

#endif  // EHSEC_ALLOCATOR_HPP_
