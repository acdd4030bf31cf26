// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "rislink/channel.hpp"
#include "rislink/experiment.hpp"
#include "rislink/link.hpp"
#include "rislink/ris.hpp"

namespace rislink {

/// Everything about a configured scene that does not depend on the sweep point.
struct LinkScene {
  PlanarArray tx;
  PlanarArray ris;
  PlanarArray rx;
  double wavelength = 0.0;
  ChannelMatrix h_ris_tx;
  ChannelMatrix h_rx_ris;
  LinkBudget budget;
  Eigen::VectorXcd cascade;
  Codebook codebook;
};

/// Unspecified normals default to: tx toward the RIS center, RIS toward the
/// midpoint of the tx and rx centers, rx toward the RIS center. The tx
/// precoder steers at the RIS center; the rx combiner is e_0.
LinkScene build_scene(const ExperimentConfig& cfg);

/// Link state at one (ratio, quantization) sweep point.
struct PointLink {
  ActiveMask mask;
  std::size_t codeword = 0;
  RisConfiguration configuration;
  EndToEndGain gain;
  Snr snr;
};

/// Builds the mask and picks a codeword. With kSelectThenQuantize the
/// codeword is chosen on continuous phases and then quantized.
PointLink configure_point(const LinkScene& scene, const ExperimentConfig& cfg, double ratio, const Quantization& bits,
                          std::size_t ratio_index);

ActiveMask point_mask(const LinkScene& scene, const ExperimentConfig& cfg, double ratio, std::size_t ratio_index);

/// SNR of the continuous conjugate-phase configuration on `mask`.
Snr oracle_snr(const LinkScene& scene, const ActiveMask& mask);

}  // namespace rislink
