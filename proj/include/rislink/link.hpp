// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>

#include "rislink/channel.hpp"
#include "rislink/configuration.hpp"
#include "rislink/geometry.hpp"
#include "rislink/symbols.hpp"

namespace rislink {

/// Transmit power, total complex noise power and unit-norm beamformers.
/// noise_power = 0 is accepted and means a noiseless link.
struct LinkBudget {
  double tx_power = 0.1;
  double noise_power = 1e-15;
  Eigen::VectorXcd w_tx;
  Eigen::VectorXcd w_rx;

  void validate() const;
};

struct EndToEndGain {
  std::complex<double> value;
};

struct Snr {
  double linear = 0.0;
  /// -inf for a dead link.
  double db() const;
};

class LinkOutage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double dbm_to_watts(double dbm);
double to_db(double linear);

/// Conjugate steering toward `target`: w_m = exp(+j k d(m, target)) / sqrt(N).
Eigen::VectorXcd steering_precoder(const PlanarArray& tx, const Vec3& target, double wavelength);

/// Single-antenna style combiner: unit vector e_0 of length n.
Eigen::VectorXcd unit_combiner(Eigen::Index n);

/// H_rx,ris * diag(active_i * exp(j theta_i)) * H_ris,tx.
ChannelMatrix end_to_end_channel(const ChannelMatrix& h_ris_tx, const RisConfiguration& cfg,
                                 const ChannelMatrix& h_rx_ris);

/// g = w_rx^H H w_tx.
EndToEndGain effective_gain(const ChannelMatrix& h_e2e, const LinkBudget& budget);

/// c_i = (w_rx^H H_rx,ris)_i (H_ris,tx w_tx)_i, so that for any configuration
/// g = sum_i active_i exp(j theta_i) c_i.
Eigen::VectorXcd cascade_coefficients(const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                                      const Eigen::VectorXcd& w_tx, const Eigen::VectorXcd& w_rx);

/// Gain of a configuration from precomputed cascade coefficients; equal to
/// effective_gain(end_to_end_channel(...)) up to rounding.
EndToEndGain reflected_gain(const Eigen::VectorXcd& cascade, const RisConfiguration& cfg);

/// |g|^2 P_tx / sigma^2. +inf when the budget is noiseless and g != 0.
Snr snr(const EndToEndGain& g, const LinkBudget& budget);

/// s_hat = g sqrt(P_tx) s + n, n ~ CN(0, sigma^2) i.i.d., one draw per symbol in
/// row-major order. The same g applies to the whole matrix. Throws
/// std::invalid_argument if a row violates the unit-power invariant.
SymbolMatrix transmit(const SymbolMatrix& s, const EndToEndGain& g, const LinkBudget& budget, std::uint64_t seed);

/// Divides every symbol by g sqrt(P_tx). Throws LinkOutage when g == 0.
SymbolMatrix equalize(const SymbolMatrix& received, const EndToEndGain& g, double tx_power);

}  // namespace rislink
