// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "rislink/bitstream.hpp"

namespace rislink {

/// Frozen 64-character table; index i is sent as the 6-bit MSB-first value i.
inline constexpr std::string_view kSixbitAlphabet =
    "abcdefghijklmnopqrstuvwxyz0123456789 .,;:!?'\"-()/&+=%$#@*_<>[]|\n";
static_assert(kSixbitAlphabet.size() == 64);

inline constexpr char kSixbitReplacement = '?';

/// Uppercase ASCII folds to lowercase; anything else outside the table becomes '?'.
char fold_sixbit(char ch);
std::string fold_to_sixbit_alphabet(std::string_view text);

BitStream sixbit_encode(std::string_view text);

/// Each complete 6-bit group maps to one character; a trailing partial group is dropped.
std::string sixbit_decode(const BitStream& bits);

nlohmann::json sixbit_alphabet_json();

}  // namespace rislink
