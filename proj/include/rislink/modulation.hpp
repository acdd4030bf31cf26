// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "rislink/bitstream.hpp"
#include "rislink/symbols.hpp"

namespace rislink {

/// One row of symbols plus what the demodulator needs to undo framing.
struct ModulatedFrame {
  SymbolMatrix symbols;
  std::size_t pad_bits = 0;
  /// Factor the row was multiplied by to reach unit mean power.
  double row_scale = 1.0;
};

/// Gray-mapped constellation with unit average energy. Frames are always
/// row-normalized so they satisfy the transmit precondition.
class Modulation {
 public:
  virtual ~Modulation() = default;
  virtual std::string name() const = 0;
  virtual int bits_per_symbol() const = 0;
  virtual ModulatedFrame modulate(const BitStream& bits) const = 0;
  /// Hard decisions on (equalized) symbols; strips the frame padding.
  virtual BitStream demodulate(const SymbolMatrix& symbols, const ModulatedFrame& frame) const = 0;
};

/// bits (b0, b1) -> ((1 - 2 b0) + j (1 - 2 b1)) / sqrt(2); 00 -> (1 + j)/sqrt(2).
/// Per-bit error probability on AWGN with symbol SNR gamma is Q(sqrt(gamma)).
class Qpsk final : public Modulation {
 public:
  std::string name() const override { return "qpsk"; }
  int bits_per_symbol() const override { return 2; }
  ModulatedFrame modulate(const BitStream& bits) const override;
  BitStream demodulate(const SymbolMatrix& symbols, const ModulatedFrame& frame) const override;
};

/// Per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, scaled by 1/sqrt(10).
class Qam16 final : public Modulation {
 public:
  std::string name() const override { return "qam16"; }
  int bits_per_symbol() const override { return 4; }
  ModulatedFrame modulate(const BitStream& bits) const override;
  BitStream demodulate(const SymbolMatrix& symbols, const ModulatedFrame& frame) const override;
};

/// "qpsk" or "qam16"; throws std::invalid_argument otherwise.
std::unique_ptr<Modulation> make_modulation(const std::string& name);

BitStream qpsk_demodulate(const SymbolMatrix& symbols, std::size_t pad_bits = 0);
ModulatedFrame qpsk_modulate(const BitStream& bits);

}  // namespace rislink
