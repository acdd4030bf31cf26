// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

namespace rislink {

std::string to_string(Method m) {
  switch (m) {
    case Method::kHuffman:
      return "huffman";
    case Method::kSixbit:
      return "sixbit";
    case Method::kSemantic:
      return "semantic";
  }
  return "unknown";
}

Method method_from_string(const std::string& s) {
  if (s == "huffman") return Method::kHuffman;
  if (s == "sixbit") return Method::kSixbit;
  if (s == "semantic") return Method::kSemantic;
  throw std::invalid_argument("unknown method '" + s + "' (expected huffman, sixbit or semantic)");
}

std::string quantization_label(const Quantization& q) { return q ? std::to_string(*q) : "none"; }

Quantization quantization_from_label(const std::string& s) {
  if (s == "none") return std::nullopt;
  std::size_t used = 0;
  int bits = 0;
  try {
    bits = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || bits < 1) {
    throw std::invalid_argument("quantization must be a positive bit count or 'none', got '" + s + "'");
  }
  return bits;
}

std::vector<double> default_ratio_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 20; ++i) out.push_back(i / 20.0);
  return out;
}

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig cfg;
  cfg.ratios = default_ratio_grid();
  return cfg;
}

void ExperimentConfig::validate() const {
  for (const ArraySpec* a : {&scene.tx, &scene.rx, &scene.ris}) {
    if (a->rows < 1 || a->cols < 1) throw std::invalid_argument("array shapes must be at least 1x1");
    if (!(a->spacing_wavelengths > 0.0)) throw std::invalid_argument("array spacing must be positive");
    if (!a->center.finite()) throw std::invalid_argument("array centers must be finite");
    if (a->normal && !(a->normal->norm() > 0.0)) throw std::invalid_argument("array normals must be non-zero");
  }
  if (!(carrier_frequency_hz > 0.0)) throw std::invalid_argument("carrier frequency must be positive");
  if (!(tx_power_w > 0.0)) throw std::invalid_argument("transmit power must be positive");
  if (!std::isfinite(noise_dbm)) throw std::invalid_argument("noise power must be finite");
  path_loss.validate();
  if (codebook.n_azimuth < 1 || codebook.n_elevation < 1) throw std::invalid_argument("codebook grid must be non-empty");
  if (ratios.empty()) throw std::invalid_argument("ratios must be non-empty");
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (!(ratios[i] > 0.0 && ratios[i] <= 1.0)) throw std::invalid_argument("ratios must lie in (0, 1]");
    if (i > 0 && !(ratios[i] > ratios[i - 1])) throw std::invalid_argument("ratios must be strictly ascending");
  }
  if (quantizations.empty()) throw std::invalid_argument("quantizations must be non-empty");
  for (const auto& q : quantizations) {
    if (q && (*q < 1 || *q > 16)) throw std::invalid_argument("quantization bits must be in [1, 16]");
  }
  if (modulation != "qpsk" && modulation != "qam16") throw std::invalid_argument("modulation must be qpsk or qam16");
  if (!(max_bleu > 0.0) || !(max_similarity > 0.0)) throw std::invalid_argument("max_bleu and max_similarity must be positive");
}

void ExperimentConfig::validate_inputs() const {
  if (methods.empty()) throw std::invalid_argument("at least one method is required");
  std::set<Method> seen;
  for (auto m : methods) {
    if (!seen.insert(m).second) throw std::invalid_argument("duplicate method " + to_string(m));
    if ((m == Method::kHuffman || m == Method::kSixbit) && !input.corpus) {
      throw std::invalid_argument(to_string(m) + " needs input.corpus");
    }
    if (m == Method::kSemantic && !input.symbols) throw std::invalid_argument("semantic needs input.symbols");
  }
}

namespace {

using nlohmann::json;

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number() || !j[1].is_number() || !j[2].is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a 3-vector of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw std::invalid_argument(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end()) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

json array_json(const ArraySpec& a) {
  json j = {{"center", vec_json(a.center)},
            {"rows", a.rows},
            {"cols", a.cols},
            {"spacing_wavelengths", a.spacing_wavelengths},
            {"normal", nullptr}};
  if (a.normal) j["normal"] = vec_json(*a.normal);
  return j;
}

ArraySpec array_from(const json& j, const ArraySpec& fallback, const std::string& where) {
  check_keys(j, {"center", "rows", "cols", "spacing_wavelengths", "normal"}, where);
  ArraySpec a = fallback;
  if (j.contains("center")) a.center = vec_from(j["center"], "center");
  if (j.contains("rows")) a.rows = j["rows"].get<int>();
  if (j.contains("cols")) a.cols = j["cols"].get<int>();
  if (j.contains("spacing_wavelengths")) a.spacing_wavelengths = j["spacing_wavelengths"].get<double>();
  if (j.contains("normal")) {
    a.normal = j["normal"].is_null() ? std::nullopt : std::optional<Vec3>(vec_from(j["normal"], "normal"));
  }
  return a;
}

json path_json(const std::optional<std::filesystem::path>& p) { return p ? json(p->string()) : json(nullptr); }

std::optional<std::filesystem::path> path_from(const json& j, const std::filesystem::path& base) {
  if (j.is_null()) return std::nullopt;
  std::filesystem::path p = j.get<std::string>();
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

json quantization_json(const Quantization& q) { return q ? json(*q) : json("none"); }

Quantization quantization_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) return quantization_from_label(j.get<std::string>());
  if (j.is_number_integer()) {
    const int bits = j.get<int>();
    if (bits < 1) throw std::invalid_argument("quantization bits must be positive");
    return bits;
  }
  throw std::invalid_argument("quantization entries must be integers or \"none\"");
}

}  // namespace

json config_to_json(const ExperimentConfig& cfg) {
  json methods = json::array();
  for (auto m : cfg.methods) methods.push_back(to_string(m));
  json quant = json::array();
  for (const auto& q : cfg.quantizations) quant.push_back(quantization_json(q));
  return {
      {"scene", {{"tx", array_json(cfg.scene.tx)}, {"rx", array_json(cfg.scene.rx)}, {"ris", array_json(cfg.scene.ris)}}},
      {"carrier_frequency_hz", cfg.carrier_frequency_hz},
      {"tx_power_w", cfg.tx_power_w},
      {"noise_dbm", cfg.noise_dbm},
      {"path_loss",
       {{"exponent", cfg.path_loss.exponent},
        {"reference_distance_m", cfg.path_loss.reference_distance},
        {"reference_loss_db", cfg.path_loss.reference_loss_db}}},
      {"codebook", {{"n_azimuth", cfg.codebook.n_azimuth}, {"n_elevation", cfg.codebook.n_elevation}}},
      {"ratios", cfg.ratios},
      {"quantizations", quant},
      {"seed", cfg.seed},
      {"mask", cfg.mask == MaskMode::kCentered ? "centered" : "random"},
      {"selection", cfg.selection == SelectionOrder::kSelectThenQuantize ? "select_then_quantize" : "quantize_then_select"},
      {"modulation", cfg.modulation},
      {"noiseless", cfg.noiseless},
      {"methods", methods},
      {"input",
       {{"corpus", path_json(cfg.input.corpus)},
        {"train_corpus", path_json(cfg.input.train_corpus)},
        {"graphs", path_json(cfg.input.graphs)},
        {"symbols", path_json(cfg.input.symbols)},
        {"reference_graph", path_json(cfg.input.reference_graph)},
        {"reference_text", path_json(cfg.input.reference_text)},
        {"reference_embeddings", path_json(cfg.input.reference_embeddings)},
        {"decoded_dir", path_json(cfg.input.decoded_dir)}}},
      {"max_bleu", cfg.max_bleu},
      {"max_similarity", cfg.max_similarity},
      {"output", path_json(cfg.output)},
  };
}

ExperimentConfig config_from_json(const json& j, const std::filesystem::path& base_dir) {
  check_keys(j,
             {"scene", "carrier_frequency_hz", "tx_power_w", "noise_dbm", "path_loss", "codebook", "ratios",
              "quantizations", "seed", "mask", "selection", "modulation", "noiseless", "methods", "input", "max_bleu",
              "max_similarity", "output"},
             "config");
  ExperimentConfig cfg = ExperimentConfig::defaults();
  try {
    if (j.contains("scene")) {
      const auto& s = j["scene"];
      check_keys(s, {"tx", "rx", "ris"}, "scene");
      if (s.contains("tx")) cfg.scene.tx = array_from(s["tx"], cfg.scene.tx, "scene.tx");
      if (s.contains("rx")) cfg.scene.rx = array_from(s["rx"], cfg.scene.rx, "scene.rx");
      if (s.contains("ris")) cfg.scene.ris = array_from(s["ris"], cfg.scene.ris, "scene.ris");
    }
    if (j.contains("carrier_frequency_hz")) cfg.carrier_frequency_hz = j["carrier_frequency_hz"].get<double>();
    if (j.contains("tx_power_w")) cfg.tx_power_w = j["tx_power_w"].get<double>();
    if (j.contains("noise_dbm")) cfg.noise_dbm = j["noise_dbm"].get<double>();
    if (j.contains("path_loss")) {
      const auto& p = j["path_loss"];
      check_keys(p, {"exponent", "reference_distance_m", "reference_loss_db"}, "path_loss");
      if (p.contains("exponent")) cfg.path_loss.exponent = p["exponent"].get<double>();
      if (p.contains("reference_distance_m")) cfg.path_loss.reference_distance = p["reference_distance_m"].get<double>();
      if (p.contains("reference_loss_db")) cfg.path_loss.reference_loss_db = p["reference_loss_db"].get<double>();
    }
    if (j.contains("codebook")) {
      const auto& c = j["codebook"];
      check_keys(c, {"n_azimuth", "n_elevation"}, "codebook");
      if (c.contains("n_azimuth")) cfg.codebook.n_azimuth = c["n_azimuth"].get<int>();
      if (c.contains("n_elevation")) cfg.codebook.n_elevation = c["n_elevation"].get<int>();
    }
    if (j.contains("ratios")) cfg.ratios = j["ratios"].get<std::vector<double>>();
    if (j.contains("quantizations")) {
      cfg.quantizations.clear();
      for (const auto& q : j["quantizations"]) cfg.quantizations.push_back(quantization_from(q));
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("mask")) {
      const auto m = j["mask"].get<std::string>();
      if (m == "centered") cfg.mask = MaskMode::kCentered;
      else if (m == "random") cfg.mask = MaskMode::kRandom;
      else throw std::invalid_argument("mask must be centered or random");
    }
    if (j.contains("selection")) {
      const auto s = j["selection"].get<std::string>();
      if (s == "select_then_quantize") cfg.selection = SelectionOrder::kSelectThenQuantize;
      else if (s == "quantize_then_select") cfg.selection = SelectionOrder::kQuantizeThenSelect;
      else throw std::invalid_argument("selection must be select_then_quantize or quantize_then_select");
    }
    if (j.contains("modulation")) cfg.modulation = j["modulation"].get<std::string>();
    if (j.contains("noiseless")) cfg.noiseless = j["noiseless"].get<bool>();
    if (j.contains("methods")) {
      cfg.methods.clear();
      for (const auto& m : j["methods"]) cfg.methods.push_back(method_from_string(m.get<std::string>()));
    }
    if (j.contains("input")) {
      const auto& in = j["input"];
      check_keys(in,
                 {"corpus", "train_corpus", "graphs", "symbols", "reference_graph", "reference_text",
                  "reference_embeddings", "decoded_dir"},
                 "input");
      auto get = [&](const char* key) { return in.contains(key) ? path_from(in[key], base_dir) : std::nullopt; };
      cfg.input = {get("corpus"), get("train_corpus"), get("graphs"), get("symbols"), get("reference_graph"),
                   get("reference_text"), get("reference_embeddings"), get("decoded_dir")};
    }
    if (j.contains("max_bleu")) cfg.max_bleu = j["max_bleu"].get<double>();
    if (j.contains("max_similarity")) cfg.max_similarity = j["max_similarity"].get<double>();
    if (j.contains("output")) cfg.output = path_from(j["output"], base_dir);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad config value: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed config " + path.string() + ": " + e.what());
  }
  return config_from_json(j, path.parent_path());
}

}  // namespace rislink
