#include <cmath>
#include <numeric>

#include <doctest.h>

#include "ehsec/sim.hpp"

using namespace ehsec;

namespace {

NetworkConfig short_scenario(Scheme scheme, int frames = 200) {
  NetworkConfig config = reference_scenario(scheme);
  config.n_frames = frames;
  return config;
}

}  // namespace

TEST_CASE("no legitimate gain means no throughput") {
  NetworkConfig config = short_scenario(Scheme::kProposed);
  config.sigma_alpha = 0.0;
  const SimResult r = run(config);
  CHECK(r.avg_sum_throughput == 0.0);
}

TEST_CASE("run records are consistent") {
  for (Scheme scheme : {Scheme::kProposed, Scheme::kFpas, Scheme::kFpfs,
                        Scheme::kApfs}) {
    const NetworkConfig config = short_scenario(scheme);
    const SimResult r = run(config);
    CAPTURE(to_string(scheme));
    REQUIRE(r.per_frame_packets.size() == 200);
    REQUIRE(r.per_frame_throughput.size() == 200);
    const double ceiling = config.rate_bps_hz * config.n_slots /
                           config.frame_duration_s();
    for (double mu : r.per_frame_throughput) {
      CHECK(mu >= 0.0);
      CHECK(mu <= ceiling);
    }
    const double mean =
        std::accumulate(r.per_frame_throughput.begin(),
                        r.per_frame_throughput.end(), 0.0) / 200.0;
    CHECK(std::abs(r.avg_sum_throughput - mean) <= 1e-12 * mean);
    CHECK(r.avg_sum_throughput <= ceiling);
    CHECK(r.causality_checks == 200L * 3 * 6);
    CHECK(r.min_causality_slack_j >= -1e-12);
    CHECK(r.final_batteries_j == r.per_frame_battery_j.back());
    for (const auto& row : r.per_frame_battery_j) {
      for (double b : row) CHECK(b >= 0.0);
    }
  }
}

TEST_CASE("run is deterministic") {
  const NetworkConfig config = short_scenario(Scheme::kFpas);
  const SimResult a = run(config);
  const SimResult b = run(config);
  CHECK(a.per_frame_packets == b.per_frame_packets);
  CHECK(a.per_frame_battery_j == b.per_frame_battery_j);
  CHECK(a.avg_sum_throughput == b.avg_sum_throughput);
}

TEST_CASE("no eavesdropper equals the outage-only model") {
  for (Scheme scheme : {Scheme::kProposed, Scheme::kFpas}) {
    NetworkConfig wiretap = short_scenario(scheme, 300);
    wiretap.sigma_beta = 0.0;
    NetworkConfig outage = wiretap;
    outage.link_model = LinkModel::kOutageOnly;
    const SimResult a = run(wiretap);
    const SimResult b = run(outage);
    CHECK(a.per_frame_packets == b.per_frame_packets);
    CHECK(a.per_frame_battery_j == b.per_frame_battery_j);
  }
}

TEST_CASE("energy-limited single sensor reaches the harvest bound") {
  // With a free beacon and cheap slots every harvested joule is usable;
  // the long-run packet rate cannot exceed harvest / cost.
  NetworkConfig config = short_scenario(Scheme::kProposed, 500);
  config.n_sensors = 1;
  config.comm_energy_j = {0.0};
  config.fixed_slots.reset();
  config.sigma_beta = 0.0;
  const SimResult r = run(config);
  const long packets = std::accumulate(
      r.per_frame_packets.begin(), r.per_frame_packets.end(), 0L,
      [](long acc, const std::vector<int>& row) { return acc + row[0]; });
  const double harvest_per_frame = 0.01 + 0.07;
  CHECK(static_cast<double>(packets) * 0.02 <=
        config.initial_battery_j + 500 * harvest_per_frame + 1e-9);
}

TEST_CASE("sweep rows follow scheme-major order and match single runs") {
  const NetworkConfig config = short_scenario(Scheme::kProposed, 100);
  const auto rows = run_sweep(config, SweepParameter::kRate, {2.0, 5.0},
                              {Scheme::kProposed, Scheme::kApfs});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].scheme == Scheme::kProposed);
  CHECK(rows[1].value == 5.0);
  CHECK(rows[2].scheme == Scheme::kApfs);

  NetworkConfig single = config;
  single.scheme = Scheme::kApfs;
  single.rate_bps_hz = 5.0;
  CHECK(rows[3].avg_sum_throughput == run(single).avg_sum_throughput);

  const auto one = run_sweep(config, SweepParameter::kSigmaBeta, {0.5},
                             {Scheme::kProposed});
  REQUIRE(one.size() == 1);
  CHECK(one[0].avg_sum_throughput == run(config).avg_sum_throughput);
}

TEST_CASE("sweep input errors") {
  const NetworkConfig config = short_scenario(Scheme::kProposed, 10);
  CHECK_THROWS_AS(parse_sweep_parameter("noise"), ConfigError);
  CHECK_THROWS_AS(run_sweep(config, SweepParameter::kRate, {}, {Scheme::kProposed}),
                  ConfigError);
  CHECK_THROWS_AS(run_sweep(config, SweepParameter::kRate, {-1.0},
                            {Scheme::kProposed}),
                  ConfigError);
  NetworkConfig bare = config;
  bare.fixed_power_w.reset();
  CHECK_THROWS_AS(run_sweep(bare, SweepParameter::kRate, {1.0}, {Scheme::kFpas}),
                  ConfigError);
}
