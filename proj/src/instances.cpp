#include "ehsec/instances.hpp"

#include <algorithm>

#include "ehsec/rng.hpp"

namespace ehsec {

std::uint64_t instance_seed(std::uint64_t batch_seed, int index) {
  return derive_seed(batch_seed,
                     {static_cast<std::uint64_t>(StreamTag::kVerifyInstance),
                      static_cast<std::uint64_t>(index)});
}

FrameProblem random_problem(std::uint64_t seed) {
  RandomStream stream(seed);
  const int m = 1 + static_cast<int>(stream.index(3));
  const int t = 1 + static_cast<int>(stream.index(6));
  std::vector<bool> eligible(static_cast<std::size_t>(m));
  std::vector<std::vector<int>> quotas(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(t)));
  for (int k = 0; k < m; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    eligible[ks] = stream.uniform() < 0.8;
    // Starting credit plus a random per-slot increment mimics a battery
    // topped up by harvest and drained at a fixed per-slot cost.
    int level = static_cast<int>(stream.index(3));
    for (int l = 0; l < t; ++l) {
      level += static_cast<int>(stream.index(3));
      quotas[ks][static_cast<std::size_t>(l)] = std::min(level, l + 1);
    }
  }
  return make_problem(std::move(eligible), std::move(quotas));
}

OracleCheck compare_with_oracle(const FrameProblem& problem) {
  OracleCheck check;
  const Assignment exact = solve_exact(problem);
  const Assignment brute = solve_bruteforce(problem);
  check.exact_objective = exact.objective_slots();
  check.bruteforce_objective = brute.objective_slots();
  if (auto err = check_assignment(problem, exact)) {
    check.infeasibility = "solve_exact: " + *err;
  } else if (auto err2 = check_assignment(problem, brute)) {
    check.infeasibility = "solve_bruteforce: " + *err2;
  }
  check.match = !check.infeasibility &&
                check.exact_objective == check.bruteforce_objective &&
                exact == brute;
  return check;
}

}  // namespace ehsec
