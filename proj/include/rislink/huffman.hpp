// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "rislink/bitstream.hpp"

namespace rislink {

using FrequencyTable = std::map<unsigned char, std::uint64_t>;

/// Byte-level Huffman code. Code lengths come from the classic two-smallest
/// merge with ties broken on (count, smallest symbol in subtree); codewords are
/// then assigned canonically in (length, symbol) order.
class HuffmanCode {
 public:
  struct Codeword {
    std::uint32_t bits = 0;  // MSB-first, `length` significant bits
    int length = 0;
    bool operator==(const Codeword&) const = default;
  };

  /// Throws std::invalid_argument with fewer than two positive-count symbols.
  static HuffmanCode build(const FrequencyTable& frequencies);

  const FrequencyTable& frequencies() const { return frequencies_; }
  const std::map<unsigned char, Codeword>& codewords() const { return codewords_; }
  std::map<unsigned char, int> lengths() const;

  /// sum p_s * len_s with p from the frequency table.
  double expected_length() const;

  /// Throws std::invalid_argument on a character without a codeword.
  BitStream encode(std::string_view text) const;

  /// Greedy decode; a trailing incomplete codeword is dropped.
  std::string decode(const BitStream& bits) const;

  nlohmann::json to_json() const;
  static HuffmanCode from_json(const nlohmann::json& j);

 private:
  FrequencyTable frequencies_;
  std::map<unsigned char, Codeword> codewords_;
};

/// Counts bytes in `text`.
FrequencyTable count_symbols(std::string_view text);

/// Shannon entropy in bits of the normalized table.
double entropy_bits(const FrequencyTable& frequencies);

}  // namespace rislink
