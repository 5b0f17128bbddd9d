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

#ifndef EDGELOOP_COMPUTE_HPP
#define EDGELOOP_COMPUTE_HPP

#include <cmath>

#include "edgeloop/errors.hpp"

// Gamma-distributed latency models for computation, compression and
// decompression.  The per-bit CPU-cycle cost of each task is Gamma
// distributed; dividing by the clock frequency and multiplying by the data
// volume turns it into a Gamma-distributed time.

namespace edgeloop {

// One processor: Gamma shape of its per-bit cycle cost, clock frequency,
// and the cycles-per-bit scale parameter of the plain-computation task.
struct ServerParams {
  double shape = 0.0;
  double freq_hz = 0.0;
  double comp_scale = 0.0;

  void validate() const {
    detail::require(shape > 0.0, "ServerParams: shape must be > 0");
    detail::require(freq_hz > 0.0, "ServerParams: freq_hz must be > 0");
    detail::require(comp_scale > 0.0, "ServerParams: comp_scale must be > 0");
  }
};

// Compression model: cost curve steepness psi, decompression-to-compression
// cycle ratio zeta, and the compression ratio q (raw size / compressed size).
struct CompressionParams {
  double psi = 0.0;
  double zeta = 0.0;
  double q = 1.0;

  void validate() const {
    detail::require(psi > 0.0, "CompressionParams: psi must be > 0");
    detail::require(zeta > 0.0 && zeta < 1.0,
                    "CompressionParams: zeta must be in (0,1)");
    detail::require(q >= 1.0, "CompressionParams: q must be >= 1");
  }
};

// Gamma(shape, scale) in seconds.  scale == 0 is a first-class point mass at
// zero, so a no-op task (e.g. compression at q = 1) stays in the same type.
struct GammaDist {
  double shape = 0.0;
  double scale = 0.0;

  double mean() const { return shape * scale; }
  double variance() const { return shape * scale * scale; }
  bool is_point_mass() const { return scale == 0.0; }
};

// Average CPU cycles needed to compress one bit at ratio q:
// C(q) = exp(q*psi) - exp(psi).  C(1) = 0, strictly increasing in q.
inline double compression_cycles(double q, double psi) {
  detail::require(q >= 1.0, "compression_cycles: q must be >= 1");
  detail::require(psi > 0.0, "compression_cycles: psi must be > 0");
  return std::exp(q * psi) - std::exp(psi);
}

// Time to run the plain computation task on data_bits of input:
// Gamma(shape, data * comp_scale / freq).
inline GammaDist computation_time_dist(const ServerParams& server,
                                       double data_bits) {
  server.validate();
  detail::require(data_bits >= 0.0, "computation_time_dist: data_bits must be >= 0");
  return GammaDist{server.shape, data_bits * server.comp_scale / server.freq_hz};
}

// Time to compress data_bits at ratio cp.q on the given processor.  The
// mean data * C(q) / freq is pinned by the cost curve; the shape parameter
// only spreads it, so the scale carries the 1/shape factor.
inline GammaDist compression_time_dist(const ServerParams& server,
                                       double data_bits,
                                       const CompressionParams& cp) {
  server.validate();
  cp.validate();
  detail::require(data_bits >= 0.0, "compression_time_dist: data_bits must be >= 0");
  const double cycles = compression_cycles(cp.q, cp.psi);
  return GammaDist{server.shape,
                   data_bits * cycles / (server.shape * server.freq_hz)};
}

// Time to decompress compressed_bits back to the original.  Decompression
// costs a fraction zeta of the compression cycles per bit.
inline GammaDist decompression_time_dist(const ServerParams& server,
                                         double compressed_bits,
                                         const CompressionParams& cp) {
  server.validate();
  cp.validate();
  detail::require(compressed_bits >= 0.0,
                  "decompression_time_dist: compressed_bits must be >= 0");
  const double cycles = compression_cycles(cp.q, cp.psi);
  return GammaDist{server.shape, compressed_bits * cp.zeta * cycles /
                                     (server.shape * server.freq_hz)};
}

}  // namespace edgeloop

#endif  // EDGELOOP_COMPUTE_HPP
