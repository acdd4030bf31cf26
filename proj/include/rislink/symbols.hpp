// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <nlohmann/json.hpp>

namespace rislink {

/// N_e x n complex symbols, one row per graph node (or one row for a baseline frame).
struct SymbolMatrix {
  Eigen::MatrixXcd values;
  bool normalized = false;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
};

inline constexpr double kRowPowerTolerance = 1e-9;

/// True when every row has mean |s|^2 = 1 within `tolerance`.
bool rows_have_unit_power(const SymbolMatrix& m, double tolerance = kRowPowerTolerance);

/// Scales each row to unit mean power. Throws std::invalid_argument on an all-zero row.
SymbolMatrix normalize_rows(const SymbolMatrix& m);

// {"n_rows": int, "n_cols": int, "data": [re, im, re, im, ...]} row-major.
nlohmann::json symbols_to_json(const SymbolMatrix& m);
SymbolMatrix symbols_from_json(const nlohmann::json& j);

SymbolMatrix load_symbol_matrix(const std::filesystem::path& path);
void store_symbol_matrix(const SymbolMatrix& m, const std::filesystem::path& path);

}  // namespace rislink
