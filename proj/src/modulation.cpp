// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/modulation.hpp"

#include <cmath>
#include <stdexcept>

namespace rislink {

namespace {

BitStream padded(const BitStream& bits, int bits_per_symbol, std::size_t& pad) {
  BitStream out = bits;
  const auto k = static_cast<std::size_t>(bits_per_symbol);
  pad = (k - bits.size() % k) % k;
  out.resize(bits.size() + pad, 0);
  return out;
}

ModulatedFrame finish_frame(Eigen::RowVectorXcd row, std::size_t pad) {
  ModulatedFrame frame;
  frame.pad_bits = pad;
  frame.symbols.values = row;
  if (row.size() > 0) {
    const double power = row.squaredNorm() / static_cast<double>(row.size());
    frame.row_scale = 1.0 / std::sqrt(power);
    frame.symbols.values *= frame.row_scale;
  }
  frame.symbols.normalized = true;
  return frame;
}

void strip_pad(BitStream& bits, std::size_t pad) {
  if (pad > bits.size()) {
    throw std::invalid_argument("frame padding exceeds the demodulated length");
  }
  bits.resize(bits.size() - pad);
}

// Gray pair for one 16-QAM axis.
double qam_level(std::uint8_t hi, std::uint8_t lo) {
  if (hi == 0) return lo == 0 ? -3.0 : -1.0;
  return lo == 1 ? 1.0 : 3.0;
}

void qam_decide(double v, BitStream& out) {
  // thresholds at -2, 0, +2 in unscaled units
  if (v < -2.0) {
    out.push_back(0), out.push_back(0);
  } else if (v < 0.0) {
    out.push_back(0), out.push_back(1);
  } else if (v < 2.0) {
    out.push_back(1), out.push_back(1);
  } else {
    out.push_back(1), out.push_back(0);
  }
}

}  // namespace

ModulatedFrame Qpsk::modulate(const BitStream& bits) const {
  std::size_t pad = 0;
  const BitStream b = padded(bits, 2, pad);
  const double a = 1.0 / std::sqrt(2.0);
  Eigen::RowVectorXcd row(static_cast<Eigen::Index>(b.size() / 2));
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    const auto b0 = b[static_cast<std::size_t>(2 * i)];
    const auto b1 = b[static_cast<std::size_t>(2 * i + 1)];
    row(i) = {a * (1.0 - 2.0 * b0), a * (1.0 - 2.0 * b1)};
  }
  ModulatedFrame frame;
  frame.pad_bits = pad;
  frame.symbols.values = row;
  frame.symbols.normalized = true;
  return frame;
}

BitStream Qpsk::demodulate(const SymbolMatrix& symbols, const ModulatedFrame& frame) const {
  BitStream out;
  out.reserve(static_cast<std::size_t>(symbols.values.size()) * 2);
  for (Eigen::Index r = 0; r < symbols.rows(); ++r) {
    for (Eigen::Index c = 0; c < symbols.cols(); ++c) {
      const auto s = symbols.values(r, c) / frame.row_scale;
      out.push_back(s.real() < 0.0 ? 1 : 0);
      out.push_back(s.imag() < 0.0 ? 1 : 0);
    }
  }
  strip_pad(out, frame.pad_bits);
  return out;
}

ModulatedFrame Qam16::modulate(const BitStream& bits) const {
  std::size_t pad = 0;
  const BitStream b = padded(bits, 4, pad);
  const double a = 1.0 / std::sqrt(10.0);
  Eigen::RowVectorXcd row(static_cast<Eigen::Index>(b.size() / 4));
  for (Eigen::Index i = 0; i < row.size(); ++i) {
    const auto* q = &b[static_cast<std::size_t>(4 * i)];
    row(i) = {a * qam_level(q[0], q[1]), a * qam_level(q[2], q[3])};
  }
  return finish_frame(std::move(row), pad);
}

BitStream Qam16::demodulate(const SymbolMatrix& symbols, const ModulatedFrame& frame) const {
  const double unscale = std::sqrt(10.0) / frame.row_scale;
  BitStream out;
  out.reserve(static_cast<std::size_t>(symbols.values.size()) * 4);
  for (Eigen::Index r = 0; r < symbols.rows(); ++r) {
    for (Eigen::Index c = 0; c < symbols.cols(); ++c) {
      const auto s = symbols.values(r, c) * unscale;
      qam_decide(s.real(), out);
      qam_decide(s.imag(), out);
    }
  }
  strip_pad(out, frame.pad_bits);
  return out;
}

std::unique_ptr<Modulation> make_modulation(const std::string& name) {
  if (name == "qpsk") return std::make_unique<Qpsk>();
  if (name == "qam16") return std::make_unique<Qam16>();
  throw std::invalid_argument("unknown modulation '" + name + "' (expected qpsk or qam16)");
}

ModulatedFrame qpsk_modulate(const BitStream& bits) { return Qpsk{}.modulate(bits); }

BitStream qpsk_demodulate(const SymbolMatrix& symbols, std::size_t pad_bits) {
  ModulatedFrame frame;
  frame.pad_bits = pad_bits;
  return Qpsk{}.demodulate(symbols, frame);
}

}  // namespace rislink
