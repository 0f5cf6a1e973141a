#include <cmath>
#include <numeric>
#include <vector>

#include <doctest.h>

#include "ehsec/allocator.hpp"
#include "ehsec/energy.hpp"
#include "ehsec/rng.hpp"

using namespace ehsec;

namespace {

// Quotas by integer millijoule arithmetic, independent of the library.
std::vector<int> quotas_in_mj(int battery, int frame_start, int beacon,
                              const std::vector<int>& harvest, int cost) {
  std::vector<int> out;
  int energy = battery + frame_start - beacon;
  for (std::size_t l = 0; l < harvest.size(); ++l) {
    energy += harvest[l];
    int q = energy < 0 ? 0 : energy / cost;
    out.push_back(std::min<int>(q, static_cast<int>(l) + 1));
  }
  return out;
}

EnergyState single_sensor(double battery, const HarvestSchedule& schedule,
                          double beacon, double cost) {
  EnergyState state = open_frame({battery}, schedule, std::vector<double>{beacon});
  state.per_slot_cost_j[0] = cost;
  return state;
}

}  // namespace

TEST_CASE("build_schedule reference values") {
  NetworkConfig config;
  const HarvestSchedule s = build_schedule(config);
  CHECK(s.frame_start_harvest_j == doctest::Approx(0.01));
  REQUIRE(s.slot_harvest_j.size() == 6);
  CHECK(s.slot_harvest_j[0] == doctest::Approx(0.02));
  for (std::size_t j = 1; j < 6; ++j) {
    CHECK(s.slot_harvest_j[j] == doctest::Approx(0.01));
  }

  config.harvest_rate_w = 0.0;
  const HarvestSchedule zero = build_schedule(config);
  CHECK(zero.total_j() == 0.0);

  config.slot_harvest_j = std::vector<double>(6, 0.005);
  CHECK(build_schedule(config).slot_harvest_j == *config.slot_harvest_j);

  config.slot_harvest_j = std::vector<double>(5, 0.005);
  CHECK_THROWS_AS(build_schedule(config), ConfigError);
}

TEST_CASE("slot_quotas hand trace") {
  NetworkConfig config;
  const HarvestSchedule schedule = build_schedule(config);
  const EnergyState state = single_sensor(0.11, schedule, 0.1, 0.03);
  REQUIRE(state.eligible[0]);

  const auto expected =
      quotas_in_mj(110, 10, 100, {20, 10, 10, 10, 10, 10}, 30);
  CHECK(expected == std::vector<int>{1, 1, 2, 2, 2, 3});
  CHECK(slot_quotas(state, schedule, 0, 0.1) == expected);
}

TEST_CASE("slot_quotas edge cases") {
  NetworkConfig config;
  const HarvestSchedule schedule = build_schedule(config);

  SUBCASE("ineligible sensor gets nothing") {
    const EnergyState state = single_sensor(0.05, schedule, 0.1, 0.03);
    CHECK_FALSE(state.eligible[0]);
    CHECK(slot_quotas(state, schedule, 0, 0.1) == std::vector<int>(6, 0));
  }
  SUBCASE("cost above all available energy") {
    const EnergyState state = single_sensor(0.11, schedule, 0.1, 1.0);
    CHECK(slot_quotas(state, schedule, 0, 0.1) == std::vector<int>(6, 0));
  }
  SUBCASE("abundant energy clamps to the prefix length") {
    const EnergyState state = single_sensor(100.0, schedule, 0.1, 0.03);
    CHECK(slot_quotas(state, schedule, 0, 0.1) ==
          std::vector<int>{1, 2, 3, 4, 5, 6});
  }
  SUBCASE("non-positive cost is rejected") {
    const EnergyState state = single_sensor(0.11, schedule, 0.1, 0.0);
    CHECK_THROWS_AS(slot_quotas(state, schedule, 0, 0.1),
                    std::invalid_argument);
  }
}

TEST_CASE("slot_quotas are monotone in prefix and in harvest") {
  RandomStream rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    HarvestSchedule schedule;
    schedule.frame_start_harvest_j = 0.02 * rng.uniform();
    for (int j = 0; j < 6; ++j) schedule.slot_harvest_j.push_back(0.03 * rng.uniform());
    const double battery = 0.2 * rng.uniform();
    const double cost = 0.005 + 0.04 * rng.uniform();
    const EnergyState state = single_sensor(battery, schedule, 0.05, cost);
    const auto base = slot_quotas(state, schedule, 0, 0.05);
    for (std::size_t l = 1; l < base.size(); ++l) CHECK(base[l] >= base[l - 1]);

    HarvestSchedule richer = schedule;
    richer.slot_harvest_j[rng.index(6)] += 0.02 * rng.uniform();
    const EnergyState richer_state = single_sensor(battery, richer, 0.05, cost);
    const auto more = slot_quotas(richer_state, richer, 0, 0.05);
    for (std::size_t l = 0; l < base.size(); ++l) CHECK(more[l] >= base[l]);
  }
}

TEST_CASE("step_frame with no transmissions accumulates harvest") {
  NetworkConfig config;
  const HarvestSchedule schedule = build_schedule(config);
  const EnergyState state = single_sensor(0.11, schedule, 0.1, 0.03);
  const FrameEnergy out =
      step_frame(state, schedule, Assignment(1, 6), std::vector<double>{0.1});
  CHECK(out.battery_j[0] == doctest::Approx(0.11 + 0.01 - 0.1 + 0.07));
  CHECK(out.checks == 6);
}

TEST_CASE("step_frame hand trace with three sends") {
  NetworkConfig config;
  const HarvestSchedule schedule = build_schedule(config);
  const EnergyState state = single_sensor(0.11, schedule, 0.1, 0.03);

  // Slot-by-slot in mJ: 110 + 10 - 100 = 20; +20 -30 = 10; +10 = 20;
  // +10 -30 = 0; +10 = 10; +10 = 20; +10 -30 = 0.
  Assignment sends(1, 6);
  for (int j : {0, 2, 5}) sends.set(0, j, true);
  const FrameEnergy out =
      step_frame(state, schedule, sends, std::vector<double>{0.1});
  CHECK(std::abs(out.battery_j[0]) < 1e-12);
  CHECK(out.queue_j[0][0] == doctest::Approx(0.04));
  CHECK(out.queue_j[0][3] == doctest::Approx(0.01));
  CHECK(out.min_slack_j >= -kEnergyEpsilonJ);

  // Three sends by slot 4 need 90 mJ when only 70 mJ has arrived.
  Assignment early(1, 6);
  for (int j : {0, 2, 3}) early.set(0, j, true);
  CHECK_THROWS_AS(step_frame(state, schedule, early, std::vector<double>{0.1}),
                  CausalityViolation);
}

TEST_CASE("step_frame for a sensor that skips the beacon") {
  NetworkConfig config;
  const HarvestSchedule schedule = build_schedule(config);
  const EnergyState state = single_sensor(0.05, schedule, 0.1, 0.03);
  REQUIRE_FALSE(state.eligible[0]);
  const FrameEnergy out =
      step_frame(state, schedule, Assignment(1, 6), std::vector<double>{0.1});
  CHECK(out.battery_j[0] == doctest::Approx(0.05 + 0.01 + 0.07));

  Assignment any(1, 6);
  any.set(0, 5, true);
  CHECK_THROWS_AS(step_frame(state, schedule, any, std::vector<double>{0.1}),
                  CausalityViolation);
}

TEST_CASE("quota soundness and energy conservation") {
  RandomStream rng(99);
  int exceeded = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    HarvestSchedule schedule;
    schedule.frame_start_harvest_j = 0.01 * rng.uniform();
    const int t = 1 + static_cast<int>(rng.index(6));
    for (int j = 0; j < t; ++j) schedule.slot_harvest_j.push_back(0.03 * rng.uniform());
    const double battery = 0.15 * rng.uniform();
    const double beacon = 0.05 * rng.uniform();
    const double cost = 0.005 + 0.03 * rng.uniform();
    const EnergyState state = single_sensor(battery, schedule, beacon, cost);
    const auto quota = slot_quotas(state, schedule, 0, beacon);

    Assignment candidate(1, t);
    for (int j = 0; j < t; ++j) candidate.set(0, j, rng.uniform() < 0.5);
    bool within = true;
    int used = 0;
    for (int l = 0; l < t; ++l) {
      used += candidate.at(0, l);
      if (used > quota[static_cast<std::size_t>(l)]) within = false;
    }
    if (!state.eligible[0] && candidate.packets(0) > 0) within = false;

    CAPTURE(trial);
    if (within) {
      const FrameEnergy out =
          step_frame(state, schedule, candidate, std::vector<double>{beacon});
      const double spend =
          (state.eligible[0] ? beacon : 0.0) + candidate.packets(0) * cost;
      const double expected = battery + schedule.total_j() - spend;
      CHECK(std::abs(out.battery_j[0] - expected) <= 1e-12);
      CHECK(out.battery_j[0] >= 0.0);
    } else {
      ++exceeded;
      CHECK_THROWS_AS(
          step_frame(state, schedule, candidate, std::vector<double>{beacon}),
          CausalityViolation);
    }
  }
  CHECK(exceeded > 100);
}
