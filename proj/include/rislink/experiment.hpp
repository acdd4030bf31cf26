// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rislink/channel.hpp"
#include "rislink/geometry.hpp"
#include "rislink/ris.hpp"

namespace rislink {

struct ArraySpec {
  Vec3 center;
  int rows = 1;
  int cols = 1;
  /// Element spacing in carrier wavelengths.
  double spacing_wavelengths = 0.5;
  /// Broadside direction; when absent the scene default is used.
  std::optional<Vec3> normal;
};

struct SceneSpec {
  ArraySpec tx{{0.0, 10.0, 0.0}, 10, 10, 0.5, std::nullopt};
  ArraySpec rx{{10.0, 15.0, 0.0}, 1, 1, 0.5, std::nullopt};
  ArraySpec ris{{10.0, 0.0, 0.0}, 40, 40, 0.5, std::nullopt};
};

enum class MaskMode { kCentered, kRandom };
enum class SelectionOrder { kSelectThenQuantize, kQuantizeThenSelect };
enum class Method { kHuffman, kSixbit, kSemantic };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Optional inputs; relative paths are resolved against the config file.
struct InputSpec {
  std::optional<std::filesystem::path> corpus;        // one sentence per line
  std::optional<std::filesystem::path> train_corpus;  // Huffman statistics; defaults to corpus
  std::optional<std::filesystem::path> graphs;        // JSON array of graphs, aligned with corpus lines
  std::optional<std::filesystem::path> symbols;       // semantic symbol matrix
  std::optional<std::filesystem::path> reference_graph;
  std::optional<std::filesystem::path> reference_text;
  std::optional<std::filesystem::path> reference_embeddings;
  std::optional<std::filesystem::path> decoded_dir;   // external decoder outputs per sweep point
};

/// Quantization of one sweep axis entry: bits, or continuous when empty.
using Quantization = std::optional<int>;

std::string quantization_label(const Quantization& q);
Quantization quantization_from_label(const std::string& s);

struct ExperimentConfig {
  SceneSpec scene;
  double carrier_frequency_hz = 28e9;
  double tx_power_w = 0.1;
  double noise_dbm = -120.0;
  PathLossModel path_loss;
  AngularGrid codebook;
  std::vector<double> ratios;
  std::vector<Quantization> quantizations{1, 2, std::nullopt};
  std::uint64_t seed = 1;
  MaskMode mask = MaskMode::kCentered;
  SelectionOrder selection = SelectionOrder::kSelectThenQuantize;
  std::string modulation = "qpsk";
  bool noiseless = false;
  std::vector<Method> methods{Method::kHuffman, Method::kSixbit};
  InputSpec input;
  double max_bleu = 0.6;
  double max_similarity = 0.93;
  std::optional<std::filesystem::path> output;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// Checks that every enabled method has the inputs it needs.
  void validate_inputs() const;

  /// Evaluation scene: tx [0,10,0] 10x10, rx [10,15,0] single antenna,
  /// RIS [10,0,0] 40x40, lambda/2 spacing, 28 GHz, 0.1 W, -120 dBm,
  /// exponent 4, ratios 0.05..1.0 step 0.05, quantization {1, 2, none}.
  static ExperimentConfig defaults();
};

std::vector<double> default_ratio_grid();

nlohmann::json config_to_json(const ExperimentConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace rislink
