// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/channel.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace rislink {

static_assert(std::endian::native == std::endian::little, "channel dumps assume a little-endian host");

double wavelength(double frequency_hz) {
  if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz)) {
    throw std::invalid_argument("carrier frequency must be positive");
  }
  return kSpeedOfLight / frequency_hz;
}

void PathLossModel::validate() const {
  if (!(exponent >= 2.0)) {
    throw std::invalid_argument("path-loss exponent must be at least 2");
  }
  if (!(reference_distance > 0.0)) {
    throw std::invalid_argument("path-loss reference distance must be positive");
  }
  if (!std::isfinite(reference_loss_db)) {
    throw std::invalid_argument("path-loss reference loss must be finite");
  }
}

double PathLossModel::loss(double distance) const {
  return std::pow(10.0, reference_loss_db / 10.0) * std::pow(distance / reference_distance, exponent);
}

ChannelMatrix los_channel(const PlanarArray& tx, const PlanarArray& rx, double wavelength,
                          const PathLossModel& path_loss) {
  tx.validate();
  rx.validate();
  path_loss.validate();
  if (!(wavelength > 0.0)) {
    throw std::invalid_argument("wavelength must be positive");
  }
  const double center_distance = (rx.center - tx.center).norm();
  if (!(center_distance > 0.0)) {
    throw DegenerateGeometry("transmit and receive arrays share a center");
  }

  const double inv_beta = 1.0 / path_loss.loss(center_distance);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  const double k = 2.0 * std::numbers::pi / wavelength;
  const auto tx_pos = element_positions(tx);
  const auto rx_pos = element_positions(rx);

  ChannelMatrix h;
  h.wavelength = wavelength;
  h.entries.resize(static_cast<Eigen::Index>(rx_pos.size()), static_cast<Eigen::Index>(tx_pos.size()));
  for (std::size_t m = 0; m < rx_pos.size(); ++m) {
    for (std::size_t n = 0; n < tx_pos.size(); ++n) {
      const Vec3 delta = rx_pos[m] - tx_pos[n];
      const double d = delta.norm();
      if (!(d > 0.0)) {
        throw DegenerateGeometry("arrays overlap at " + to_string(tx_pos[n]));
      }
      const double cos_rx = std::clamp(-rx.normal.dot(delta) / d, 0.0, 1.0);
      const double cos_tx = std::clamp(tx.normal.dot(delta) / d, 0.0, 1.0);
      const double amplitude = std::sqrt(pi2 * cos_rx * cos_tx * inv_beta);
      h.entries(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n)) = std::polar(amplitude, -k * d);
    }
  }
  return h;
}

namespace {

constexpr std::array<char, 4> kMagic{'R', 'I', 'S', 'H'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T value{};
  if (!is.read(reinterpret_cast<char*>(&value), sizeof(T))) {
    throw std::runtime_error("truncated channel dump");
  }
  return value;
}

}  // namespace

void write_channel_binary(const ChannelMatrix& h, std::ostream& os) {
  os.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(os, kVersion);
  put<std::uint64_t>(os, static_cast<std::uint64_t>(h.rows()));
  put<std::uint64_t>(os, static_cast<std::uint64_t>(h.cols()));
  put<double>(os, h.wavelength);
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      put<double>(os, h.entries(r, c).real());
      put<double>(os, h.entries(r, c).imag());
    }
  }
}

ChannelMatrix read_channel_binary(std::istream& is) {
  std::array<char, 4> magic{};
  if (!is.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a channel dump (bad magic)");
  }
  if (get<std::uint32_t>(is) != kVersion) {
    throw std::runtime_error("unsupported channel dump version");
  }
  const auto rows = get<std::uint64_t>(is);
  const auto cols = get<std::uint64_t>(is);
  ChannelMatrix h;
  h.wavelength = get<double>(is);
  h.entries.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      const double re = get<double>(is);
      const double im = get<double>(is);
      h.entries(r, c) = {re, im};
    }
  }
  return h;
}

nlohmann::json channel_to_json(const ChannelMatrix& h) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < h.rows(); ++r) {
    for (Eigen::Index c = 0; c < h.cols(); ++c) {
      data.push_back(h.entries(r, c).real());
      data.push_back(h.entries(r, c).imag());
    }
  }
  return {{"n_rows", h.rows()}, {"n_cols", h.cols()}, {"wavelength", h.wavelength}, {"data", std::move(data)}};
}

ChannelMatrix channel_from_json(const nlohmann::json& j) {
  ChannelMatrix h;
  const auto rows = j.at("n_rows").get<Eigen::Index>();
  const auto cols = j.at("n_cols").get<Eigen::Index>();
  h.wavelength = j.at("wavelength").get<double>();
  const auto& data = j.at("data");
  if (rows < 0 || cols < 0 || data.size() != static_cast<std::size_t>(2 * rows * cols)) {
    throw std::runtime_error("channel JSON data length does not match its shape");
  }
  h.entries.resize(rows, cols);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c, i += 2) {
      h.entries(r, c) = {data[i].get<double>(), data[i + 1].get<double>()};
    }
  }
  return h;
}

}  // namespace rislink
