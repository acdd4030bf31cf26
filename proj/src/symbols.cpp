// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/symbols.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace rislink {

bool rows_have_unit_power(const SymbolMatrix& m, double tolerance) {
  if (m.cols() == 0) {
    return true;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double power = m.values.row(r).squaredNorm() / static_cast<double>(m.cols());
    if (std::abs(power - 1.0) > tolerance) {
      return false;
    }
  }
  return true;
}

SymbolMatrix normalize_rows(const SymbolMatrix& m) {
  SymbolMatrix out{m.values, true};
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double power = m.values.row(r).squaredNorm() / static_cast<double>(m.cols());
    if (!(power > 0.0)) {
      throw std::invalid_argument("cannot normalize all-zero symbol row " + std::to_string(r));
    }
    out.values.row(r) /= std::sqrt(power);
  }
  return out;
}

nlohmann::json symbols_to_json(const SymbolMatrix& m) {
  nlohmann::json data = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back(m.values(r, c).real());
      data.push_back(m.values(r, c).imag());
    }
  }
  return {{"n_rows", m.rows()}, {"n_cols", m.cols()}, {"data", std::move(data)}};
}

SymbolMatrix symbols_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_rows") || !j.contains("n_cols") || !j.contains("data")) {
    throw std::runtime_error("symbol matrix JSON needs n_rows, n_cols and data");
  }
  const auto& jr = j.at("n_rows");
  const auto& jc = j.at("n_cols");
  if (!jr.is_number_integer() || !jc.is_number_integer() || jr.get<long long>() < 0 || jc.get<long long>() < 0) {
    throw std::runtime_error("symbol matrix shape must be non-negative integers");
  }
  const auto rows = jr.get<Eigen::Index>();
  const auto cols = jc.get<Eigen::Index>();
  const auto& data = j.at("data");
  if (!data.is_array()) {
    throw std::runtime_error("symbol matrix data must be an array");
  }
  const auto expected = static_cast<std::size_t>(2 * rows * cols);
  if (data.size() != expected) {
    throw std::runtime_error("symbol matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) + " needs " +
                             std::to_string(expected) + " reals, file has " + std::to_string(data.size()));
  }
  SymbolMatrix m;
  m.values.resize(rows, cols);
  std::size_t i = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c, i += 2) {
      if (!data[i].is_number() || !data[i + 1].is_number()) {
        throw std::runtime_error("symbol matrix data entry " + std::to_string(i) + " is not a number");
      }
      m.values(r, c) = {data[i].get<double>(), data[i + 1].get<double>()};
    }
  }
  m.normalized = rows_have_unit_power(m);
  return m;
}

SymbolMatrix load_symbol_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open symbol matrix file " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed symbol matrix file " + path.string() + ": " + e.what());
  }
  return symbols_from_json(j);
}

void store_symbol_matrix(const SymbolMatrix& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write symbol matrix file " + path.string());
  }
  out << symbols_to_json(m).dump() << '\n';
}

}  // namespace rislink
