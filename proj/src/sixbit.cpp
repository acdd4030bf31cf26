// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/sixbit.hpp"

#include <array>

namespace rislink {

namespace {

constexpr std::array<int, 256> make_index() {
  std::array<int, 256> index{};
  for (auto& v : index) v = -1;
  for (std::size_t i = 0; i < kSixbitAlphabet.size(); ++i) {
    index[static_cast<unsigned char>(kSixbitAlphabet[i])] = static_cast<int>(i);
  }
  return index;
}

constexpr auto kIndex = make_index();

}  // namespace

char fold_sixbit(char ch) {
  if (ch >= 'A' && ch <= 'Z') {
    ch = static_cast<char>(ch - 'A' + 'a');
  }
  return kIndex[static_cast<unsigned char>(ch)] >= 0 ? ch : kSixbitReplacement;
}

std::string fold_to_sixbit_alphabet(std::string_view text) {
  std::string out(text);
  for (auto& ch : out) ch = fold_sixbit(ch);
  return out;
}

BitStream sixbit_encode(std::string_view text) {
  BitStream bits;
  bits.reserve(text.size() * 6);
  for (char ch : text) {
    const int v = kIndex[static_cast<unsigned char>(fold_sixbit(ch))];
    for (int b = 5; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
  }
  return bits;
}

std::string sixbit_decode(const BitStream& bits) {
  std::string out;
  out.reserve(bits.size() / 6);
  for (std::size_t i = 0; i + 6 <= bits.size(); i += 6) {
    int v = 0;
    for (std::size_t b = 0; b < 6; ++b) v = (v << 1) | (bits[i + b] & 1);
    out.push_back(kSixbitAlphabet[static_cast<std::size_t>(v)]);
  }
  return out;
}

nlohmann::json sixbit_alphabet_json() {
  return {{"kind", "sixbit"}, {"alphabet", std::string(kSixbitAlphabet)}, {"replacement", std::string(1, kSixbitReplacement)}};
}

}  // namespace rislink
