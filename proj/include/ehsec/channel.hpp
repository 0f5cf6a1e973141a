#ifndef EHSEC_CHANNEL_HPP_
#define EHSEC_CHANNEL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ehsec/config.hpp"

namespace ehsec {

// Block-fading gains for one frame. Gains are squared fading magnitudes;
// the normalized gains are divided by the receiver's noise-plus-interference
// power and so carry units of 1/W.
struct ChannelRealization {
  int frame_index = 1;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> alpha_norm;
  std::vector<double> beta_norm;
};

// Draws the frame's gains. Each (frame, sensor, link) has its own stream
// derived from config.master_seed, so the result depends only on the seed,
// the frame index and the sensor index. The legitimate gain is exponential
// with mean sigma_alpha^2 and the eavesdropper gain exponential with mean
// sigma_beta^2; sigma_beta = 0 gives beta = 0 identically.
ChannelRealization draw_channels(const NetworkConfig& config, int frame_index);

// Secrecy capacity in bits/s/Hz at transmit power `power_w`:
// log2(1 + P a) - log2(1 + P b) when a > b, zero otherwise.
double secrecy_capacity(double power_w, double alpha_norm, double beta_norm);

// Capacity of a single link, log2(1 + P g).
double link_capacity(double power_w, double gain_norm);

// Smallest power that keeps rate `rate_bps_hz` both decodable and secret:
// (2^R - 1) / (a - 2^R b). Empty when a - 2^R b <= 0, in which case no power
// achieves secrecy at that rate.
std::optional<double> min_secure_power(double rate_bps_hz, double alpha_norm,
                                       double beta_norm);

// Outage-only counterpart, (2^R - 1) / a; empty when a = 0.
std::optional<double> min_outage_power(double rate_bps_hz, double alpha_norm);

}  // namespace ehsec

#endif  // EHSEC_CHANNEL_HPP_
