// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace rislink {

using ActiveMask = std::vector<bool>;

/// Per-element RIS state: phase shifts in [0, 2pi), which elements reflect,
/// and the phase resolution the phases were snapped to (empty = continuous).
struct RisConfiguration {
  std::vector<double> phases;
  ActiveMask active;
  std::optional<int> quantization_bits;

  std::size_t size() const { return phases.size(); }
  std::size_t active_count() const;

  /// Throws std::invalid_argument on length mismatch, out-of-range phases
  /// or active phases off the quantization lattice.
  void validate() const;

  static RisConfiguration continuous(std::vector<double> phases);
  static RisConfiguration continuous(std::vector<double> phases, ActiveMask active);
};

}  // namespace rislink
