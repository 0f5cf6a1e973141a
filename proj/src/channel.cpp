#include "ehsec/channel.hpp"

#include <cmath>
#include <numbers>

#include "ehsec/rng.hpp"

namespace ehsec {
namespace {

double draw_gain(std::uint64_t master_seed, StreamTag link, int frame_index,
                 int sensor, double sigma) {
  RandomStream stream(derive_seed(
      master_seed, {static_cast<std::uint64_t>(link),
                    static_cast<std::uint64_t>(frame_index),
                    static_cast<std::uint64_t>(sensor)}));
  // |CN(0, sigma^2)|^2 is exponential with mean sigma^2.
  return stream.exponential(sigma * sigma);
}

}  // namespace

ChannelRealization draw_channels(const NetworkConfig& config,
                                 int frame_index) {
  const auto m = static_cast<std::size_t>(config.n_sensors);
  ChannelRealization out;
  out.frame_index = frame_index;
  out.alpha.resize(m);
  out.beta.resize(m);
  out.alpha_norm.resize(m);
  out.beta_norm.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const int sensor = static_cast<int>(k);
    out.alpha[k] = draw_gain(config.master_seed, StreamTag::kLegitimateGain,
                             frame_index, sensor, config.sigma_alpha);
    out.beta[k] = config.sigma_beta > 0.0
                      ? draw_gain(config.master_seed,
                                  StreamTag::kEavesdropperGain, frame_index,
                                  sensor, config.sigma_beta)
                      : 0.0;
    out.alpha_norm[k] = out.alpha[k] / config.noise_dest_w;
    out.beta_norm[k] = out.beta[k] / config.noise_eve_w;
  }
  return out;
}

double link_capacity(double power_w, double gain_norm) {
  return std::log1p(power_w * gain_norm) / std::numbers::ln2;
}

double secrecy_capacity(double power_w, double alpha_norm, double beta_norm) {
  if (alpha_norm <= beta_norm) return 0.0;
  return link_capacity(power_w, alpha_norm) - link_capacity(power_w, beta_norm);
}

std::optional<double> min_secure_power(double rate_bps_hz, double alpha_norm,
                                       double beta_norm) {
  const double growth = std::exp2(rate_bps_hz);
  const double margin = alpha_norm - growth * beta_norm;
  if (!(margin > 0.0)) return std::nullopt;
  return std::expm1(rate_bps_hz * std::numbers::ln2) / margin;
}

std::optional<double> min_outage_power(double rate_bps_hz, double alpha_norm) {
  if (!(alpha_norm > 0.0)) return std::nullopt;
  return std::expm1(rate_bps_hz * std::numbers::ln2) / alpha_norm;
}

}  // namespace ehsec
