// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rislink {

std::size_t RisConfiguration::active_count() const {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), true));
}

void RisConfiguration::validate() const {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (phases.size() != active.size()) {
    throw std::invalid_argument("RIS configuration has " + std::to_string(phases.size()) + " phases but " +
                                std::to_string(active.size()) + " mask entries");
  }
  if (quantization_bits && *quantization_bits < 1) {
    throw std::invalid_argument("quantization bits must be positive");
  }
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const double theta = phases[i];
    if (!(theta >= 0.0 && theta < kTwoPi)) {
      throw std::invalid_argument("RIS phase " + std::to_string(theta) + " outside [0, 2pi)");
    }
    if (quantization_bits && active[i]) {
      const double step = kTwoPi / static_cast<double>(1u << *quantization_bits);
      const double level = std::round(theta / step);
      if (std::abs(theta - level * step) > 1e-12) {
        throw std::invalid_argument("active phase " + std::to_string(theta) + " is not a " +
                                    std::to_string(*quantization_bits) + "-bit level");
      }
    }
  }
}

RisConfiguration RisConfiguration::continuous(std::vector<double> phases) {
  ActiveMask active(phases.size(), true);
  return continuous(std::move(phases), std::move(active));
}

RisConfiguration RisConfiguration::continuous(std::vector<double> phases, ActiveMask active) {
  RisConfiguration cfg{std::move(phases), std::move(active), std::nullopt};
  cfg.validate();
  return cfg;
}

}  // namespace rislink
