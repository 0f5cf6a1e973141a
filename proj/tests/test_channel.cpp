#include <cmath>
#include <random>

#include <doctest.h>

#include "ehsec/channel.hpp"
#include "ehsec/rng.hpp"

using namespace ehsec;

TEST_CASE("secrecy_capacity matches direct substitution") {
  // log2(1 + 1*3) - log2(1 + 1*1) = 2 - 1
  CHECK(secrecy_capacity(1.0, 3.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(secrecy_capacity(5.0, 1.0, 1.0) == 0.0);
  CHECK(secrecy_capacity(5.0, 1.0, 2.0) == 0.0);
  CHECK(secrecy_capacity(0.0, 3.0, 1.0) == 0.0);
}

TEST_CASE("min_secure_power examples") {
  auto p = min_secure_power(1.0, 3.0, 1.0);
  REQUIRE(p);
  CHECK(*p == doctest::Approx(1.0).epsilon(1e-15));

  p = min_secure_power(1.0, 1.0, 0.0);
  REQUIRE(p);
  CHECK(*p == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_FALSE(min_secure_power(1.0, 1.0, 1.0));
  // Margin exactly zero is infeasible.
  CHECK_FALSE(min_secure_power(2.0, 4.0, 1.0));
}

TEST_CASE("min_outage_power is the beta = 0 case") {
  for (double a : {0.5, 3.0, 1e4}) {
    CHECK(min_outage_power(3.0, a) == min_secure_power(3.0, a, 0.0));
  }
  CHECK_FALSE(min_outage_power(3.0, 0.0));
}

TEST_CASE("min power properties over random feasible inputs") {
  RandomStream rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double rate = 0.1 + 7.9 * rng.uniform();
    const double b = std::pow(10.0, -2.0 + 6.0 * rng.uniform());
    const double a = std::exp2(rate) * b * (1.0 + 10.0 * rng.uniform()) + 1e-9;
    const auto p = min_secure_power(rate, a, b);
    REQUIRE(p);
    CAPTURE(rate);
    CAPTURE(a);
    CAPTURE(b);
    // Tightness.
    CHECK(std::abs(secrecy_capacity(*p, a, b) - rate) < 1e-9);
    // Dominance on either side of the minimum.
    CHECK(secrecy_capacity(*p * 0.99, a, b) < rate);
    CHECK(secrecy_capacity(*p * 1.01, a, b) > rate);
    // Feasibility implies a > b.
    CHECK(a > b);
    // Strictly increasing in rate, strictly decreasing in alpha.
    const auto p_lower_rate = min_secure_power(rate * 0.9, a, b);
    REQUIRE(p_lower_rate);
    CHECK(*p_lower_rate < *p);
    const auto p_better_alpha = min_secure_power(rate, a * 1.1, b);
    REQUIRE(p_better_alpha);
    CHECK(*p_better_alpha < *p);
  }
}

TEST_CASE("draw_channels is deterministic per seed and frame") {
  NetworkConfig config;
  const auto first = draw_channels(config, 17);
  const auto again = draw_channels(config, 17);
  CHECK(first.alpha == again.alpha);
  CHECK(first.beta == again.beta);
  CHECK(first.alpha_norm == again.alpha_norm);

  const auto other_frame = draw_channels(config, 18);
  CHECK(first.alpha != other_frame.alpha);

  config.master_seed = 2;
  CHECK(draw_channels(config, 17).alpha != first.alpha);
}

TEST_CASE("draw_channels normalization and shape") {
  NetworkConfig config;
  config.n_sensors = 5;
  config.comm_energy_j.assign(5, 0.1);
  for (int frame = 1; frame <= 50; ++frame) {
    const auto ch = draw_channels(config, frame);
    REQUIRE(ch.alpha.size() == 5);
    REQUIRE(ch.beta_norm.size() == 5);
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(ch.alpha[k] >= 0.0);
      CHECK(ch.beta[k] >= 0.0);
      CHECK(std::abs(ch.alpha_norm[k] * config.noise_dest_w - ch.alpha[k]) <=
            1e-12 * ch.alpha[k]);
      CHECK(std::abs(ch.beta_norm[k] * config.noise_eve_w - ch.beta[k]) <=
            1e-12 * ch.beta[k]);
    }
  }
}

TEST_CASE("sigma_beta = 0 removes the eavesdropper") {
  NetworkConfig config;
  config.sigma_beta = 0.0;
  for (int frame = 1; frame <= 20; ++frame) {
    for (double b : draw_channels(config, frame).beta) CHECK(b == 0.0);
  }
}

TEST_CASE("gain statistics follow the exponential convention") {
  NetworkConfig config;
  config.n_sensors = 5;
  config.comm_energy_j.assign(5, 0.1);
  config.sigma_alpha = 1.0;
  config.sigma_beta = 0.5;
  double sum_alpha = 0.0;
  double sum_beta = 0.0;
  const int frames = 200000;
  for (int frame = 1; frame <= frames; ++frame) {
    const auto ch = draw_channels(config, frame);
    for (std::size_t k = 0; k < 5; ++k) {
      sum_alpha += ch.alpha[k];
      sum_beta += ch.beta[k];
    }
  }
  const double n = 5.0 * frames;
  CHECK(std::abs(sum_alpha / n - 1.0) < 0.01);
  CHECK(std::abs(sum_beta / n - 0.25) < 0.01 * 0.25);
}
