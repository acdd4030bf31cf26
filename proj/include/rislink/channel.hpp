// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>
#include <nlohmann/json.hpp>

#include "rislink/geometry.hpp"

namespace rislink {

inline constexpr double kSpeedOfLight = 299'792'458.0;

/// Carrier wavelength in meters.
double wavelength(double frequency_hz);

/// beta(d) = 10^(reference_loss_db/10) * (d / reference_distance)^exponent.
/// reference_loss_db defaults to 0, giving the bare power law.
struct PathLossModel {
  double exponent = 4.0;
  double reference_distance = 1.0;
  double reference_loss_db = 0.0;

  void validate() const;
  double loss(double distance) const;
};

/// Rows index receiving elements, columns transmitting elements.
struct ChannelMatrix {
  Eigen::MatrixXcd entries;
  double wavelength = 0.0;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

/// Line-of-sight channel from every element of `tx` to every element of `rx`:
///   H(m, n) = sqrt(pi^2 cos(phi_rx) cos(phi_tx) / beta) exp(-j k d_mn)
/// with beta evaluated once at the center-to-center distance and the cosines
/// clamped at zero for back half-space illumination.
ChannelMatrix los_channel(const PlanarArray& tx, const PlanarArray& rx, double wavelength, const PathLossModel& path_loss);

// Debug dumps. Binary layout (little-endian): "RISH", u32 version = 1, u64 rows,
// u64 cols, f64 wavelength, then rows*cols (re, im) f64 pairs in row-major order.
void write_channel_binary(const ChannelMatrix& h, std::ostream& os);
ChannelMatrix read_channel_binary(std::istream& is);

nlohmann::json channel_to_json(const ChannelMatrix& h);
ChannelMatrix channel_from_json(const nlohmann::json& j);

}  // namespace rislink
