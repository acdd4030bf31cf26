// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <vector>

#include "rislink/channel.hpp"
#include "rislink/configuration.hpp"
#include "rislink/geometry.hpp"
#include "rislink/link.hpp"

namespace rislink {

struct Codeword {
  Vec3 direction;
  RisConfiguration configuration;
};

struct Codebook {
  std::vector<Codeword> entries;
  Vec3 incident_direction;

  std::size_t size() const { return entries.size(); }
};

/// Candidate outgoing directions: n_azimuth rotations around the RIS normal
/// times n_elevation tilts off broadside, tilt_l = l * (pi/2) / n_elevation.
struct AngularGrid {
  int n_azimuth = 72;
  int n_elevation = 18;
};

/// Unit direction for grid cell (azimuth a, tilt e) in the frame of `ris`.
Vec3 grid_direction(const PlanarArray& ris, const AngularGrid& grid, int azimuth, int elevation);

/// Phase-gradient codebook: codeword for outgoing u has
///   theta_i = mod(-k p_i . (u_inc + u), 2pi)
/// where p_i is element i's offset from the RIS center and u_inc points from
/// the RIS toward the source. Enumerated azimuth-major.
Codebook build_codebook(const PlanarArray& ris, const Vec3& incident, const AngularGrid& grid, double wavelength);

/// Wraps to [0, 2pi).
double wrap_phase(double theta);

/// Nearest level 2pi k / 2^bits under circular distance, ties to the lower level.
double quantize_phase(double theta, int bits);

/// Snaps active phases to `bits`-bit levels; inactive phases are left as is.
RisConfiguration quantize_phases(const RisConfiguration& cfg, int bits);

/// Centered square block of side round(sqrt(ratio * rows * cols)), clipped to
/// the array. Throws std::invalid_argument for ratio outside (0, 1] or side 0.
ActiveMask active_mask(const PlanarArray& ris, double ratio);

/// round(ratio * N) elements drawn uniformly without replacement.
ActiveMask random_active_mask(const PlanarArray& ris, double ratio, std::uint64_t seed);

/// Continuous phases that cancel each active element's cascaded phase,
/// theta_i = -arg(c_i); elements with c_i == 0 get phase 0.
RisConfiguration conjugate_phases(const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                                  const Eigen::VectorXcd& w_tx, const Eigen::VectorXcd& w_rx, const ActiveMask& mask);
RisConfiguration conjugate_phases(const Eigen::VectorXcd& cascade, const ActiveMask& mask);

/// Applies `mask` to a codeword's phases (and quantizes if bits is set).
RisConfiguration apply_codeword(const Codeword& codeword, const ActiveMask& mask, std::optional<int> bits);

struct Selection {
  std::size_t index = 0;
  RisConfiguration configuration;
  Snr snr;
};

/// Evaluates every masked (optionally quantized) codeword and returns the one
/// with the highest SNR; lowest index wins ties.
Selection select_codeword(const Codebook& codebook, const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                          const LinkBudget& budget, const ActiveMask& mask, std::optional<int> bits);

/// Same selection driven by precomputed cascade coefficients.
Selection select_codeword(const Codebook& codebook, const Eigen::VectorXcd& cascade, const LinkBudget& budget,
                          const ActiveMask& mask, std::optional<int> bits);

nlohmann::json codebook_to_json(const Codebook& codebook);
Codebook codebook_from_json(const nlohmann::json& j);

}  // namespace rislink
