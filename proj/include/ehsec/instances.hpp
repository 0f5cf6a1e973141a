#ifndef EHSEC_INSTANCES_HPP_
#define EHSEC_INSTANCES_HPP_

#include <cstdint>

#include "ehsec/allocator.hpp"

namespace ehsec {

// Seed of the i-th instance in a verification batch. Printing this value is
// enough to regenerate a failing instance with random_problem().
std::uint64_t instance_seed(std::uint64_t batch_seed, int index);

// Random brute-forceable instance: 1..3 sensors, 1..6 slots, each sensor
// eligible with probability 0.8 and given non-decreasing prefix quotas
// capped at the prefix length.
FrameProblem random_problem(std::uint64_t seed);

struct OracleCheck {
  bool match = true;
  int exact_objective = 0;
  int bruteforce_objective = 0;
  std::optional<std::string> infeasibility;  // first invalid solver output
};

// Solves `problem` with both solvers and compares objectives and
// assignments, validating each output.
OracleCheck compare_with_oracle(const FrameProblem& problem);

}  // namespace ehsec

#endif  // EHSEC_INSTANCES_HPP_
