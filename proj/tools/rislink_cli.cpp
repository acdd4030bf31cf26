// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: sweeps, codebook export, single-point SNR,
// symbol-matrix transmission and offline metric scoring.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "rislink/experiment.hpp"
#include "rislink/graph.hpp"
#include "rislink/metrics.hpp"
#include "rislink/scene.hpp"
#include "rislink/sweep.hpp"

namespace {

using namespace rislink;

ExperimentConfig config_or_default(const std::string& path) {
  return path.empty() ? ExperimentConfig::defaults() : load_config(path);
}

ActiveMask mask_for(const LinkScene& scene, const ExperimentConfig& cfg, double ratio) {
  return point_mask(scene, cfg, ratio, 0);
}

enum class InputKind { kText, kGraph, kEmbeddings };

InputKind classify(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded()) return InputKind::kText;
  if (j.is_object() && j.contains("vectors")) return InputKind::kEmbeddings;
  if (j.is_array() || (j.is_object() && (j.contains("nodes") || j.contains("triplets")))) return InputKind::kGraph;
  throw std::runtime_error(path + ": JSON is neither a graph nor an embedding file");
}

int cmd_metrics(const std::string& ref, const std::string& hyp, double max_bleu, double max_sim) {
  const InputKind kind = classify(ref);
  if (classify(hyp) != kind) throw std::runtime_error("reference and hypothesis are different kinds of file");
  switch (kind) {
    case InputKind::kText: {
      const auto r = read_lines(ref);
      const auto h = read_lines(hyp);
      if (r.size() != h.size()) {
        throw std::runtime_error("reference has " + std::to_string(r.size()) + " lines, hypothesis " +
                                 std::to_string(h.size()));
      }
      std::vector<Tokens> rt, ht;
      std::size_t chars = 0, edits = 0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        rt.push_back(tokenize(r[i]));
        ht.push_back(tokenize(h[i]));
        chars += r[i].size();
        edits += levenshtein(r[i], h[i]);
      }
      const double b = corpus_bleu(ht, rt);
      std::cout << "bleu " << format_double(b) << "\nrel_bleu " << format_double(relative_bleu(b, max_bleu))
                << "\nchar_err " << format_double(chars ? static_cast<double>(edits) / chars : 0.0) << '\n';
      break;
    }
    case InputKind::kGraph: {
      const auto s = triplet_f1(load_graph_file(ref), load_graph_file(hyp));
      std::cout << "precision " << format_double(s.precision) << "\nrecall " << format_double(s.recall) << "\nf1 "
                << format_double(s.f1) << '\n';
      break;
    }
    case InputKind::kEmbeddings: {
      const double sim = mean_cosine_similarity(load_embeddings(ref), load_embeddings(hyp));
      std::cout << "similarity " << format_double(sim) << "\nrel_similarity " << format_double(sim / max_sim) << '\n';
      break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-aided link-level simulator"};
  app.require_subcommand(0, 1);
  bool print_default = false;
  app.add_flag("--print-default-config", print_default, "Print the default experiment config as JSON");

  std::string config_path, out_path, in_path, ref_path, hyp_path, bits_label = "none", link_name = "tx-ris",
                                                                   format = "json";
  int jobs = 1;
  double ratio = 1.0, max_bleu = 0.6, max_sim = 0.93;
  std::uint64_t seed = 1;
  bool raw = false;

  auto* sweep = app.add_subcommand("sweep", "Run the ratio x quantization x method sweep and write a CSV");
  sweep->add_option("--config", config_path, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "Output CSV")->required();
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  auto* codebook = app.add_subcommand("codebook", "Export the RIS codebook as JSON");
  codebook->add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  codebook->add_option("--out", out_path, "Output file (stdout when omitted)");

  auto* snr_cmd = app.add_subcommand("snr", "Select a codeword at one sweep point and report its SNR");
  snr_cmd->add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  snr_cmd->add_option("--ratio", ratio, "Active element ratio in (0, 1]")->required();
  snr_cmd->add_option("--bits", bits_label, "Phase bits or 'none'");

  auto* tx_cmd = app.add_subcommand("transmit", "Send a symbol-matrix file through the configured link");
  tx_cmd->add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  tx_cmd->add_option("--in", in_path, "Input symbol matrix (JSON)")->required()->check(CLI::ExistingFile);
  tx_cmd->add_option("--out", out_path, "Output symbol matrix (JSON)")->required();
  tx_cmd->add_option("--ratio", ratio, "Active element ratio in (0, 1]");
  tx_cmd->add_option("--bits", bits_label, "Phase bits or 'none'");
  tx_cmd->add_option("--seed", seed, "Noise seed");
  tx_cmd->add_flag("--raw", raw, "Write received symbols without equalization");

  auto* metrics_cmd = app.add_subcommand("metrics", "Score decoded text, graph or embedding files against references");
  metrics_cmd->add_option("--ref", ref_path, "Reference file")->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--hyp", hyp_path, "Decoded file")->required()->check(CLI::ExistingFile);
  metrics_cmd->add_option("--max-bleu", max_bleu, "BLEU ceiling for relative BLEU");
  metrics_cmd->add_option("--max-sim", max_sim, "Similarity ceiling for relative similarity");

  auto* channel_cmd = app.add_subcommand("channel", "Dump a channel matrix for debugging");
  channel_cmd->add_option("--config", config_path, "Experiment config (JSON)")->check(CLI::ExistingFile);
  channel_cmd->add_option("--link", link_name, "tx-ris or ris-rx")->check(CLI::IsMember({"tx-ris", "ris-rx"}));
  channel_cmd->add_option("--format", format, "json or bin")->check(CLI::IsMember({"json", "bin"}));
  channel_cmd->add_option("--out", out_path, "Output file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (print_default) {
      std::cout << config_to_json(ExperimentConfig::defaults()).dump(2) << '\n';
      return 0;
    }
    if (*sweep) {
      const auto records = run_sweep_to_file(load_config(config_path), out_path, jobs);
      std::cerr << "wrote " << records.size() << " records to " << out_path << '\n';
      return 0;
    }
    if (*codebook) {
      const auto cfg = config_or_default(config_path);
      const auto scene = build_scene(cfg);
      const auto text = codebook_to_json(scene.codebook).dump();
      if (out_path.empty()) {
        std::cout << text << '\n';
      } else {
        std::ofstream(out_path) << text << '\n';
      }
      return 0;
    }
    if (*snr_cmd) {
      const auto cfg = config_or_default(config_path);
      const auto scene = build_scene(cfg);
      const auto point = configure_point(scene, cfg, ratio, quantization_from_label(bits_label), 0);
      std::cout << "codeword " << point.codeword << "\nactive " << point.configuration.active_count() << "\nsnr_db "
                << format_double(point.snr.db()) << "\noracle_snr_db "
                << format_double(oracle_snr(scene, point.mask).db()) << '\n';
      return 0;
    }
    if (*tx_cmd) {
      const auto cfg = config_or_default(config_path);
      const auto scene = build_scene(cfg);
      const auto point = configure_point(scene, cfg, ratio, quantization_from_label(bits_label), 0);
      SymbolMatrix s = load_symbol_matrix(in_path);
      if (!s.normalized) s = normalize_rows(s);
      LinkBudget budget = scene.budget;
      if (cfg.noiseless) budget.noise_power = 0.0;
      SymbolMatrix rx = transmit(s, point.gain, budget, seed);
      if (!raw) rx = equalize(rx, point.gain, budget.tx_power);
      store_symbol_matrix(rx, out_path);
      std::cerr << "snr_db " << format_double(point.snr.db()) << '\n';
      return 0;
    }
    if (*metrics_cmd) {
      return cmd_metrics(ref_path, hyp_path, max_bleu, max_sim);
    }
    if (*channel_cmd) {
      const auto scene = build_scene(config_or_default(config_path));
      const ChannelMatrix& h = link_name == "tx-ris" ? scene.h_ris_tx : scene.h_rx_ris;
      if (format == "bin") {
        std::ofstream out(out_path, std::ios::binary);
        write_channel_binary(h, out);
      } else {
        std::ofstream(out_path) << channel_to_json(h).dump() << '\n';
      }
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
