// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/link.hpp"

#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace rislink {

namespace {

constexpr double kUnitNormTolerance = 1e-12;

}  // namespace

void LinkBudget::validate() const {
  if (!(tx_power > 0.0)) {
    throw std::invalid_argument("transmit power must be positive");
  }
  if (!(noise_power >= 0.0) || !std::isfinite(noise_power)) {
    throw std::invalid_argument("noise power must be non-negative");
  }
  if (std::abs(w_tx.norm() - 1.0) > kUnitNormTolerance || std::abs(w_rx.norm() - 1.0) > kUnitNormTolerance) {
    throw std::invalid_argument("precoder and combiner must be unit norm");
  }
}

double Snr::db() const {
  if (linear <= 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return to_db(linear);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double to_db(double linear) { return 10.0 * std::log10(linear); }

Eigen::VectorXcd steering_precoder(const PlanarArray& tx, const Vec3& target, double wavelength) {
  const double k = 2.0 * std::numbers::pi / wavelength;
  const auto positions = element_positions(tx);
  if (!((target - tx.center).norm() > 0.0)) {
    throw DegenerateGeometry("steering target coincides with the array center");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(positions.size()));
  Eigen::VectorXcd w(static_cast<Eigen::Index>(positions.size()));
  for (std::size_t m = 0; m < positions.size(); ++m) {
    w(static_cast<Eigen::Index>(m)) = std::polar(scale, k * (target - positions[m]).norm());
  }
  return w;
}

Eigen::VectorXcd unit_combiner(Eigen::Index n) {
  Eigen::VectorXcd w = Eigen::VectorXcd::Zero(n);
  w(0) = 1.0;
  return w;
}

namespace {

Eigen::VectorXcd reflection_diagonal(const RisConfiguration& cfg) {
  Eigen::VectorXcd d(static_cast<Eigen::Index>(cfg.size()));
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    d(static_cast<Eigen::Index>(i)) = cfg.active[i] ? std::polar(1.0, cfg.phases[i]) : std::complex<double>{};
  }
  return d;
}

}  // namespace

ChannelMatrix end_to_end_channel(const ChannelMatrix& h_ris_tx, const RisConfiguration& cfg,
                                 const ChannelMatrix& h_rx_ris) {
  if (cfg.phases.size() != cfg.active.size()) {
    throw std::invalid_argument("configuration phases and mask differ in length");
  }
  const auto n_ris = static_cast<Eigen::Index>(cfg.size());
  if (h_ris_tx.rows() != n_ris || h_rx_ris.cols() != n_ris) {
    throw std::invalid_argument("channel chain mismatch: H_ris,tx has " + std::to_string(h_ris_tx.rows()) +
                                " rows, H_rx,ris has " + std::to_string(h_rx_ris.cols()) + " columns, RIS has " +
                                std::to_string(n_ris) + " elements");
  }
  ChannelMatrix out;
  out.wavelength = h_ris_tx.wavelength;
  out.entries = h_rx_ris.entries * reflection_diagonal(cfg).asDiagonal() * h_ris_tx.entries;
  return out;
}

EndToEndGain effective_gain(const ChannelMatrix& h_e2e, const LinkBudget& budget) {
  if (h_e2e.rows() != budget.w_rx.size() || h_e2e.cols() != budget.w_tx.size()) {
    throw std::invalid_argument("beamformer dimensions do not match the end-to-end channel");
  }
  return {budget.w_rx.dot(h_e2e.entries * budget.w_tx)};
}

Eigen::VectorXcd cascade_coefficients(const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                                      const Eigen::VectorXcd& w_tx, const Eigen::VectorXcd& w_rx) {
  if (h_ris_tx.cols() != w_tx.size() || h_rx_ris.rows() != w_rx.size() || h_ris_tx.rows() != h_rx_ris.cols()) {
    throw std::invalid_argument("cascade dimensions do not chain");
  }
  const Eigen::VectorXcd incident = h_ris_tx.entries * w_tx;
  // (w_rx^H H_rx,ris)^T
  const Eigen::VectorXcd outgoing = h_rx_ris.entries.transpose() * w_rx.conjugate();
  return outgoing.cwiseProduct(incident);
}

EndToEndGain reflected_gain(const Eigen::VectorXcd& cascade, const RisConfiguration& cfg) {
  if (static_cast<std::size_t>(cascade.size()) != cfg.size() || cfg.active.size() != cfg.size()) {
    throw std::invalid_argument("configuration size does not match the cascade");
  }
  std::complex<double> g{};
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (cfg.active[i]) {
      g += std::polar(1.0, cfg.phases[i]) * cascade(static_cast<Eigen::Index>(i));
    }
  }
  return {g};
}

Snr snr(const EndToEndGain& g, const LinkBudget& budget) {
  const double signal = std::norm(g.value) * budget.tx_power;
  if (signal == 0.0) {
    return {0.0};
  }
  if (budget.noise_power == 0.0) {
    return {std::numeric_limits<double>::infinity()};
  }
  return {signal / budget.noise_power};
}

SymbolMatrix transmit(const SymbolMatrix& s, const EndToEndGain& g, const LinkBudget& budget, std::uint64_t seed) {
  if (!rows_have_unit_power(s)) {
    throw std::invalid_argument("symbol rows must have unit mean power before transmission");
  }
  const std::complex<double> scale = g.value * std::sqrt(budget.tx_power);
  SymbolMatrix out{s.values * scale, false};
  if (budget.noise_power > 0.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> component(0.0, std::sqrt(budget.noise_power / 2.0));
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        const double re = component(rng);
        const double im = component(rng);
        out.values(r, c) += std::complex<double>{re, im};
      }
    }
  }
  return out;
}

SymbolMatrix equalize(const SymbolMatrix& received, const EndToEndGain& g, double tx_power) {
  const std::complex<double> scale = g.value * std::sqrt(tx_power);
  if (scale == std::complex<double>{}) {
    throw LinkOutage("end-to-end gain is zero; the link is in outage");
  }
  return {received.values / scale, false};
}

}  // namespace rislink
