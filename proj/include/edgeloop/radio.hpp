// Copyright 2026 The Edgeloop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EDGELOOP_RADIO_HPP
#define EDGELOOP_RADIO_HPP

#include <cmath>
#include <cstdint>
#include <string>

#include "edgeloop/errors.hpp"

// Link-budget arithmetic for a Rayleigh block-fading link operated at an
// epsilon-outage rate, and the stochastic model of the time needed to push a
// block of packets through it with stop-and-wait retransmissions.

namespace edgeloop {

// Physical parameters of one wireless link.  All values linear (no dB);
// noise_n0 is a power spectral density in W/Hz.
struct LinkParams {
  double tx_power_watts = 0.0;
  double distance_m = 0.0;
  double bandwidth_hz = 0.0;
  double friss_k0 = 0.0;
  double path_loss_exp = 0.0;
  double noise_n0 = 0.0;
  std::int64_t packet_bits = 0;

  void validate() const {
    detail::require(tx_power_watts > 0.0, "LinkParams: tx_power_watts must be > 0");
    detail::require(distance_m > 0.0, "LinkParams: distance_m must be > 0");
    detail::require(bandwidth_hz > 0.0, "LinkParams: bandwidth_hz must be > 0");
    detail::require(friss_k0 > 0.0, "LinkParams: friss_k0 must be > 0");
    detail::require(path_loss_exp >= 1.0, "LinkParams: path_loss_exp must be >= 1");
    detail::require(noise_n0 > 0.0, "LinkParams: noise_n0 must be > 0");
    detail::require(packet_bits > 0, "LinkParams: packet_bits must be > 0");
  }
};

// Average SNR of the link: K0 * P / (d^l * N0 * B).
inline double avg_snr(const LinkParams& link) {
  link.validate();
  return link.friss_k0 * link.tx_power_watts /
         (std::pow(link.distance_m, link.path_loss_exp) * link.noise_n0 *
          link.bandwidth_hz);
}

// SNR threshold below which a Rayleigh-faded link with average SNR gamma0
// is in outage with probability epsilon.
inline double snr_threshold(double gamma0, double epsilon) {
  detail::require(gamma0 > 0.0, "snr_threshold: gamma0 must be > 0");
  detail::require(epsilon > 0.0 && epsilon < 1.0,
                  "snr_threshold: epsilon must be in (0,1)");
  return gamma0 * std::log(1.0 / (1.0 - epsilon));
}

// Achievable rate in bit/s when the link accepts outage epsilon.
// Strictly increasing in epsilon.
inline double rate(const LinkParams& link, double epsilon) {
  const double gth = snr_threshold(avg_snr(link), epsilon);
  return link.bandwidth_hz * std::log2(1.0 + gth);
}

// Time in seconds to transmit one packet of link.packet_bits at the
// epsilon-outage operating point.  Spectral-efficiency form: the packet
// occupies n_p / (2 B log2(1 + gamma_th)) seconds.
inline double packet_time(const LinkParams& link, double epsilon) {
  const double gth = snr_threshold(avg_snr(link), epsilon);
  const double log_term = std::log2(1.0 + gth);
  if (log_term <= 0.0) {
    throw domain_error("packet_time: zero spectral efficiency at epsilon=" +
                       std::to_string(epsilon));
  }
  return static_cast<double>(link.packet_bits) / (2.0 * link.bandwidth_hz * log_term);
}

// Gaussian approximation of the block transmission time (sum of N geometric
// per-packet times).  sigma2_s2 == 0 marks a degenerate point mass at mu_s,
// which is what epsilon = 0 produces.
struct TxTimeModel {
  std::int64_t n_packets = 0;
  double epsilon = 0.0;
  double t_packet_s = 0.0;
  double mu_s = 0.0;
  double sigma2_s2 = 0.0;

  bool is_point_mass() const { return sigma2_s2 == 0.0; }
};

// Builds the Gaussian block-time model.  The approximation needs its left
// tail to stay out of negative time: mu - 4*sigma >= 0 is checked here and a
// violation is reported as an error rather than clipped.
inline TxTimeModel tx_time_model(std::int64_t n_packets, double epsilon,
                                 double t_packet) {
  detail::require(n_packets >= 1, "tx_time_model: n_packets must be >= 1");
  detail::require(epsilon >= 0.0 && epsilon < 1.0,
                  "tx_time_model: epsilon must be in [0,1)");
  detail::require(t_packet > 0.0, "tx_time_model: t_packet must be > 0");

  TxTimeModel m;
  m.n_packets = n_packets;
  m.epsilon = epsilon;
  m.t_packet_s = t_packet;
  if (epsilon == 0.0) {
    m.mu_s = static_cast<double>(n_packets) * t_packet;
    m.sigma2_s2 = 0.0;
    return m;
  }
  const double n = static_cast<double>(n_packets);
  const double one_minus = 1.0 - epsilon;
  m.mu_s = n * t_packet / one_minus;
  m.sigma2_s2 = n * epsilon * t_packet * t_packet / (one_minus * one_minus);
  if (m.mu_s - 4.0 * std::sqrt(m.sigma2_s2) < 0.0) {
    throw numeric_error(
        "tx_time_model: mu - 4*sigma < 0, Gaussian block-time approximation "
        "invalid (n_packets=" + std::to_string(n_packets) +
        ", epsilon=" + std::to_string(epsilon) + ")");
  }
  return m;
}

// Exact probability that transmitting a block of n_packets takes k packet
// slots in total: negative binomial over the number of trials,
// C(k-1, N-1) * eps^(k-N) * (1-eps)^N for k >= N, else 0.
inline double tx_time_negbin_pmf(std::int64_t n_packets, double epsilon,
                                 std::int64_t k) {
  detail::require(n_packets >= 1, "tx_time_negbin_pmf: n_packets must be >= 1");
  detail::require(epsilon >= 0.0 && epsilon < 1.0,
                  "tx_time_negbin_pmf: epsilon must be in [0,1)");
  if (k < n_packets) return 0.0;
  if (epsilon == 0.0) return k == n_packets ? 1.0 : 0.0;
  const double n = static_cast<double>(n_packets);
  const double kd = static_cast<double>(k);
  const double log_choose =
      std::lgamma(kd) - std::lgamma(n) - std::lgamma(kd - n + 1.0);
  return std::exp(log_choose + (kd - n) * std::log(epsilon) +
                  n * std::log(1.0 - epsilon));
}

}  // namespace edgeloop

#endif  // EDGELOOP_RADIO_HPP
