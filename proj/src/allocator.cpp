#include "ehsec/allocator.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "ehsec/max_flow.hpp"

namespace ehsec {
namespace {

std::optional<double> admissible_power(const ChannelRealization& channels,
                                       int sensor, const NetworkConfig& config,
                                       Scheme scheme) {
  const auto k = static_cast<std::size_t>(sensor);
  const double a = channels.alpha_norm[k];
  const double b = channels.beta_norm[k];
  const double rate = config.rate_bps_hz;
  const bool wiretap = config.link_model == LinkModel::kWiretap;

  if (!uses_fixed_power(scheme)) {
    return wiretap ? min_secure_power(rate, a, b) : min_outage_power(rate, a);
  }
  const double power = config.fixed_power_w.value();
  const double capacity =
      wiretap ? secrecy_capacity(power, a, b) : link_capacity(power, a);
  if (capacity > rate) return power;
  return std::nullopt;
}

// True when sensor k can take one more slot at `slot` given `used` slots so
// far, without breaking any prefix quota from `slot` on.
bool has_headroom(const std::vector<int>& quota, int used, int slot) {
  for (std::size_t l = static_cast<std::size_t>(slot); l < quota.size(); ++l) {
    if (used + 1 > quota[l]) return false;
  }
  return true;
}

// Residual instance used while fixing cells of the exact solution.
struct Residual {
  std::vector<std::vector<int>> quotas;
  std::vector<std::vector<bool>> open;  // cell may still be set to 1
  std::vector<bool> slot_taken;

  // Maximum number of additional cells that can be switched on, or -1 if
  // the forced cells already break a quota.
  int max_extra() const {
    const int m = static_cast<int>(quotas.size());
    const int t = m == 0 ? 0 : static_cast<int>(quotas.front().size());
    // Nodes: source, sink, m*t prefix nodes, t slot nodes.
    const int source = 0;
    const int sink = 1;
    auto prefix_node = [t](int k, int l) { return 2 + k * t + l; };
    auto slot_node = [m, t](int j) { return 2 + m * t + j; };
    MaxFlow flow(2 + m * t + t);
    for (int k = 0; k < m; ++k) {
      const auto& q = quotas[static_cast<std::size_t>(k)];
      for (int l = 0; l < t; ++l) {
        if (q[static_cast<std::size_t>(l)] < 0) return -1;
      }
      // Flow into prefix node (k, l) counts sensor k's slots in 0..l.
      flow.add_edge(source, prefix_node(k, t - 1),
                    q[static_cast<std::size_t>(t - 1)]);
      for (int l = t - 1; l >= 0; --l) {
        if (l > 0) {
          flow.add_edge(prefix_node(k, l), prefix_node(k, l - 1),
                        q[static_cast<std::size_t>(l - 1)]);
        }
        if (open[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] &&
            !slot_taken[static_cast<std::size_t>(l)]) {
          flow.add_edge(prefix_node(k, l), slot_node(l), 1);
        }
      }
    }
    for (int j = 0; j < t; ++j) {
      if (!slot_taken[static_cast<std::size_t>(j)]) {
        flow.add_edge(slot_node(j), sink, 1);
      }
    }
    return flow.solve(source, sink);
  }
};

}  // namespace

FrameProblem build_problem(const ChannelRealization& channels,
                           EnergyState state, const HarvestSchedule& schedule,
                           const NetworkConfig& config, Scheme scheme) {
  const int m = config.n_sensors;
  FrameProblem problem;
  problem.eligible.assign(static_cast<std::size_t>(m), false);
  problem.quotas.assign(static_cast<std::size_t>(m),
                        std::vector<int>(schedule.slot_harvest_j.size(), 0));

  for (int k = 0; k < m; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    const auto power = admissible_power(channels, k, config, scheme);
    if (power) {
      state.per_slot_cost_j[ks] =
          *power * config.slot_duration_s + config.proc_energy_j;
    }
    const bool has_energy =
        state.battery_j[ks] + schedule.frame_start_harvest_j > 0.0;
    problem.eligible[ks] = power.has_value() && state.eligible[ks] && has_energy;
    if (problem.eligible[ks]) {
      problem.quotas[ks] =
          slot_quotas(state, schedule, k, config.comm_energy_j[ks]);
    }
  }
  problem.energy = std::move(state);
  return problem;
}

FrameProblem make_problem(std::vector<bool> eligible,
                          std::vector<std::vector<int>> quotas) {
  if (eligible.size() != quotas.size()) {
    throw std::invalid_argument("make_problem: eligibility/quota size mismatch");
  }
  FrameProblem problem;
  for (std::size_t k = 0; k < quotas.size(); ++k) {
    if (quotas[k].size() != quotas.front().size()) {
      throw std::invalid_argument("make_problem: ragged quota matrix");
    }
    if (!eligible[k]) std::fill(quotas[k].begin(), quotas[k].end(), 0);
  }
  const std::size_t m = quotas.size();
  problem.eligible = std::move(eligible);
  problem.quotas = std::move(quotas);
  problem.energy.battery_j.assign(m, 0.0);
  problem.energy.eligible.assign(m, true);
  problem.energy.per_slot_cost_j.assign(
      m, std::numeric_limits<double>::infinity());
  return problem;
}

std::optional<std::string> check_assignment(const FrameProblem& problem,
                                            const Assignment& assignment) {
  const int m = problem.n_sensors();
  const int t = problem.n_slots();
  if (assignment.n_sensors() != m || assignment.n_slots() != t) {
    return "assignment shape does not match the problem";
  }
  for (int j = 0; j < t; ++j) {
    int owners = 0;
    for (int k = 0; k < m; ++k) owners += assignment.at(k, j);
    if (owners > 1) {
      return "slot " + std::to_string(j + 1) + " has " +
             std::to_string(owners) + " transmitters";
    }
  }
  for (int k = 0; k < m; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    if (!problem.eligible[ks] && assignment.packets(k) > 0) {
      return "ineligible sensor " + std::to_string(k + 1) + " was given slots";
    }
    int used = 0;
    for (int l = 0; l < t; ++l) {
      used += assignment.at(k, l);
      if (used > problem.quotas[ks][static_cast<std::size_t>(l)]) {
        return "sensor " + std::to_string(k + 1) + " exceeds its quota by slot " +
               std::to_string(l + 1);
      }
    }
  }
  return std::nullopt;
}

Assignment solve_exact(const FrameProblem& problem) {
  const int m = problem.n_sensors();
  const int t = problem.n_slots();
  Residual residual;
  residual.quotas = problem.quotas;
  residual.slot_taken.assign(static_cast<std::size_t>(t), false);
  residual.open.assign(static_cast<std::size_t>(m),
                       std::vector<bool>(static_cast<std::size_t>(t), false));
  for (int k = 0; k < m; ++k) {
    if (!problem.eligible[static_cast<std::size_t>(k)]) continue;
    std::fill(residual.open[static_cast<std::size_t>(k)].begin(),
              residual.open[static_cast<std::size_t>(k)].end(), true);
  }

  const int optimum = residual.max_extra();
  Assignment out(m, t);
  int fixed = 0;
  // Greedy lexicographic fixing: switch a cell on whenever the optimum
  // remains reachable with it on.
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < t; ++j) {
      const auto ks = static_cast<std::size_t>(k);
      const auto js = static_cast<std::size_t>(j);
      if (!residual.open[ks][js] || residual.slot_taken[js]) continue;
      Residual trial = residual;
      trial.slot_taken[js] = true;
      trial.open[ks][js] = false;
      for (std::size_t l = js; l < trial.quotas[ks].size(); ++l) {
        --trial.quotas[ks][l];
      }
      const int extra = trial.max_extra();
      if (extra >= 0 && fixed + 1 + extra == optimum) {
        residual = std::move(trial);
        out.set(k, j, true);
        ++fixed;
      } else {
        residual.open[ks][js] = false;
      }
    }
  }
  if (fixed != optimum) {
    throw std::logic_error("solve_exact: lexicographic fixing lost optimality");
  }
  return out;
}

Assignment solve_bruteforce(const FrameProblem& problem) {
  const int m = problem.n_sensors();
  const int t = problem.n_slots();
  if (m * t > kBruteForceMaxCells) {
    throw std::invalid_argument("solve_bruteforce: instance has " +
                                std::to_string(m * t) + " cells, limit is " +
                                std::to_string(kBruteForceMaxCells));
  }
  // Odometer over per-slot owners; owner m means idle.
  std::vector<int> owner(static_cast<std::size_t>(t), m);
  Assignment best(m, t);
  int best_count = 0;
  for (;;) {
    Assignment candidate(m, t);
    for (int j = 0; j < t; ++j) {
      const int k = owner[static_cast<std::size_t>(j)];
      if (k < m) candidate.set(k, j, true);
    }
    if (!check_assignment(problem, candidate)) {
      const int count = candidate.objective_slots();
      if (count > best_count ||
          (count == best_count && candidate.cells() > best.cells())) {
        best = std::move(candidate);
        best_count = count;
      }
    }
    int j = 0;
    while (j < t && owner[static_cast<std::size_t>(j)] == 0) {
      owner[static_cast<std::size_t>(j)] = m;
      ++j;
    }
    if (j == t) break;
    --owner[static_cast<std::size_t>(j)];
  }
  return best;
}

Assignment assign_fixed_slots(const FrameProblem& problem,
                              const std::vector<std::vector<int>>& slot_map) {
  const int m = problem.n_sensors();
  const int t = problem.n_slots();
  if (slot_map.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("assign_fixed_slots: one slot list per sensor");
  }
  std::set<int> seen;
  for (const auto& slots : slot_map) {
    for (int j : slots) {
      if (j < 0 || j >= t || !seen.insert(j).second) {
        throw std::invalid_argument(
            "assign_fixed_slots: slot map is out of range or overlapping");
      }
    }
  }

  Assignment out(m, t);
  for (int k = 0; k < m; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    if (!problem.eligible[ks]) continue;
    std::vector<int> slots = slot_map[ks];
    std::sort(slots.begin(), slots.end());
    int used = 0;
    for (int j : slots) {
      if (has_headroom(problem.quotas[ks], used, j)) {
        out.set(k, j, true);
        ++used;
      }
    }
  }
  return out;
}

Assignment assign_probabilistic(const FrameProblem& problem,
                                RandomStream stream) {
  const int m = problem.n_sensors();
  const int t = problem.n_slots();
  Assignment out(m, t);
  std::vector<int> used(static_cast<std::size_t>(m), 0);
  std::vector<int> candidates;
  for (int j = 0; j < t; ++j) {
    candidates.clear();
    for (int k = 0; k < m; ++k) {
      const auto ks = static_cast<std::size_t>(k);
      if (problem.eligible[ks] &&
          has_headroom(problem.quotas[ks], used[ks], j)) {
        candidates.push_back(k);
      }
    }
    if (candidates.empty()) continue;
    const int winner = candidates[stream.index(candidates.size())];
    out.set(winner, j, true);
    ++used[static_cast<std::size_t>(winner)];
  }
  return out;
}

}  // namespace ehsec
