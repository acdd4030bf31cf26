// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/ris.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace rislink {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double wrap_phase(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  // fmod of a tiny negative value can round up to exactly 2pi
  return r >= kTwoPi ? 0.0 : r;
}

Vec3 grid_direction(const PlanarArray& ris, const AngularGrid& grid, int azimuth, int elevation) {
  const double phi = kTwoPi * azimuth / grid.n_azimuth;
  const double tilt = 0.5 * std::numbers::pi * elevation / grid.n_elevation;
  const Vec3 u = ris.normal * std::cos(tilt) +
                 (ris.axis_col * std::cos(phi) + ris.axis_row * std::sin(phi)) * std::sin(tilt);
  return u.normalized();
}

Codebook build_codebook(const PlanarArray& ris, const Vec3& incident, const AngularGrid& grid, double wavelength) {
  ris.validate();
  if (grid.n_azimuth < 1 || grid.n_elevation < 1) {
    throw std::invalid_argument("codebook grid must have at least one azimuth and one elevation");
  }
  const Vec3 u_inc = incident.normalized();
  if (!(u_inc.dot(ris.normal) > 0.0)) {
    throw std::invalid_argument("incident direction must lie in the RIS front half-space");
  }
  const double k = kTwoPi / wavelength;
  std::vector<Vec3> offsets;
  offsets.reserve(ris.size());
  for (std::size_t i = 0; i < ris.size(); ++i) {
    offsets.push_back(element_offset(ris, i));
  }

  Codebook cb;
  cb.incident_direction = u_inc;
  cb.entries.reserve(static_cast<std::size_t>(grid.n_azimuth) * static_cast<std::size_t>(grid.n_elevation));
  for (int a = 0; a < grid.n_azimuth; ++a) {
    for (int e = 0; e < grid.n_elevation; ++e) {
      Codeword cw;
      cw.direction = grid_direction(ris, grid, a, e);
      const Vec3 sum = u_inc + cw.direction;
      std::vector<double> phases(offsets.size());
      std::transform(offsets.begin(), offsets.end(), phases.begin(),
                     [&](const Vec3& p) { return wrap_phase(-k * p.dot(sum)); });
      cw.configuration = RisConfiguration::continuous(std::move(phases));
      cb.entries.push_back(std::move(cw));
    }
  }
  return cb;
}

double quantize_phase(double theta, int bits) {
  if (bits < 1 || bits > 30) {
    throw std::invalid_argument("quantization bits must be in [1, 30]");
  }
  const auto levels = 1u << bits;
  const double step = kTwoPi / static_cast<double>(levels);
  const double t = wrap_phase(theta);
  const auto lower = std::min(static_cast<unsigned>(std::floor(t / step)), levels - 1);
  const double to_lower = t - lower * step;
  const double to_upper = (lower + 1) * step - t;
  // the level above the top one is 0 again
  const unsigned chosen = to_upper < to_lower ? (lower + 1) % levels : lower;
  return chosen * step;
}

RisConfiguration quantize_phases(const RisConfiguration& cfg, int bits) {
  RisConfiguration out = cfg;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out.active[i]) {
      out.phases[i] = quantize_phase(out.phases[i], bits);
    }
  }
  out.quantization_bits = bits;
  return out;
}

ActiveMask active_mask(const PlanarArray& ris, double ratio) {
  ris.validate();
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw std::invalid_argument("active ratio must be in (0, 1]");
  }
  const auto side = static_cast<int>(std::lround(std::sqrt(ratio * ris.rows * ris.cols)));
  if (side == 0) {
    throw std::invalid_argument("active ratio " + std::to_string(ratio) + " leaves no element active");
  }
  const int side_r = std::min(side, ris.rows);
  const int side_c = std::min(side, ris.cols);
  const int r0 = (ris.rows - side_r) / 2;
  const int c0 = (ris.cols - side_c) / 2;
  ActiveMask mask(ris.size(), false);
  for (int r = r0; r < r0 + side_r; ++r) {
    for (int c = c0; c < c0 + side_c; ++c) {
      mask[static_cast<std::size_t>(r) * ris.cols + c] = true;
    }
  }
  return mask;
}

ActiveMask random_active_mask(const PlanarArray& ris, double ratio, std::uint64_t seed) {
  ris.validate();
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw std::invalid_argument("active ratio must be in (0, 1]");
  }
  const auto count = static_cast<std::size_t>(std::llround(ratio * static_cast<double>(ris.size())));
  if (count == 0) {
    throw std::invalid_argument("active ratio " + std::to_string(ratio) + " leaves no element active");
  }
  std::vector<std::size_t> order(ris.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates with plain modulo draws so the mask does not depend
  // on the standard library's distribution algorithms
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (order.size() - i));
    std::swap(order[i], order[j]);
  }
  ActiveMask mask(ris.size(), false);
  for (std::size_t i = 0; i < count; ++i) {
    mask[order[i]] = true;
  }
  return mask;
}

RisConfiguration conjugate_phases(const Eigen::VectorXcd& cascade, const ActiveMask& mask) {
  if (static_cast<std::size_t>(cascade.size()) != mask.size()) {
    throw std::invalid_argument("mask length does not match the RIS element count");
  }
  std::vector<double> phases(mask.size(), 0.0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    const auto c = cascade(static_cast<Eigen::Index>(i));
    if (mask[i] && c != std::complex<double>{}) {
      phases[i] = wrap_phase(-std::arg(c));
    }
  }
  return RisConfiguration::continuous(std::move(phases), mask);
}

RisConfiguration conjugate_phases(const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                                  const Eigen::VectorXcd& w_tx, const Eigen::VectorXcd& w_rx, const ActiveMask& mask) {
  return conjugate_phases(cascade_coefficients(h_ris_tx, h_rx_ris, w_tx, w_rx), mask);
}

RisConfiguration apply_codeword(const Codeword& codeword, const ActiveMask& mask, std::optional<int> bits) {
  if (mask.size() != codeword.configuration.size()) {
    throw std::invalid_argument("mask length does not match the codeword");
  }
  RisConfiguration cfg = codeword.configuration;
  cfg.active = mask;
  return bits ? quantize_phases(cfg, *bits) : cfg;
}

Selection select_codeword(const Codebook& codebook, const Eigen::VectorXcd& cascade, const LinkBudget& budget,
                          const ActiveMask& mask, std::optional<int> bits) {
  if (codebook.entries.empty()) {
    throw std::invalid_argument("cannot select from an empty codebook");
  }
  Selection best;
  bool have = false;
  for (std::size_t i = 0; i < codebook.size(); ++i) {
    RisConfiguration cfg = apply_codeword(codebook.entries[i], mask, bits);
    const Snr value = snr(reflected_gain(cascade, cfg), budget);
    if (!have || value.linear > best.snr.linear) {
      best = {i, std::move(cfg), value};
      have = true;
    }
  }
  return best;
}

Selection select_codeword(const Codebook& codebook, const ChannelMatrix& h_ris_tx, const ChannelMatrix& h_rx_ris,
                          const LinkBudget& budget, const ActiveMask& mask, std::optional<int> bits) {
  return select_codeword(codebook, cascade_coefficients(h_ris_tx, h_rx_ris, budget.w_tx, budget.w_rx), budget, mask,
                         bits);
}

nlohmann::json codebook_to_json(const Codebook& codebook) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& cw : codebook.entries) {
    entries.push_back({{"direction", {cw.direction.x, cw.direction.y, cw.direction.z}},
                       {"phases", cw.configuration.phases}});
  }
  const Vec3& u = codebook.incident_direction;
  return {{"incident_direction", {u.x, u.y, u.z}}, {"entries", std::move(entries)}};
}

namespace {

Vec3 vec_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw std::runtime_error("expected a 3-vector");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

}  // namespace

Codebook codebook_from_json(const nlohmann::json& j) {
  Codebook cb;
  cb.incident_direction = vec_from_json(j.at("incident_direction"));
  for (const auto& e : j.at("entries")) {
    Codeword cw;
    cw.direction = vec_from_json(e.at("direction"));
    cw.configuration = RisConfiguration::continuous(e.at("phases").get<std::vector<double>>());
    cb.entries.push_back(std::move(cw));
  }
  if (cb.entries.empty()) {
    throw std::runtime_error("codebook has no entries");
  }
  return cb;
}

}  // namespace rislink
