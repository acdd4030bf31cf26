// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

namespace rislink {

/// One entry per bit, each 0 or 1.
using BitStream = std::vector<std::uint8_t>;

}  // namespace rislink
