// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rislink/experiment.hpp"
#include "rislink/huffman.hpp"
#include "rislink/link.hpp"
#include "rislink/modulation.hpp"

namespace rislink {

struct SweepRecord {
  double ratio = 0.0;
  Quantization bits;
  std::size_t codeword = 0;
  double snr_db = 0.0;
  Method method = Method::kHuffman;
  std::optional<double> ber;
  std::optional<double> char_err;
  std::optional<double> bleu;
  std::optional<double> rel_bleu;
  std::optional<double> f1;
  std::optional<double> similarity;
  std::uint64_t seed = 0;

  bool operator==(const SweepRecord&) const = default;
};

inline constexpr std::string_view kCsvHeader = "ratio,bits,codeword,snr_db,method,ber,char_err,bleu,rel_bleu,f1,similarity,seed";

/// Totals from pushing a list of texts through source coding, modulation and the link.
struct TextRunStats {
  std::size_t bits_sent = 0;
  std::size_t bit_errors = 0;
  std::size_t chars_sent = 0;
  std::size_t char_edits = 0;
  std::vector<std::string> decoded;

  double ber() const;
  double char_error() const;
};

/// Source coder used by the text baselines.
class TextCoder {
 public:
  static TextCoder huffman(HuffmanCode code);
  static TextCoder sixbit();

  BitStream encode(std::string_view text) const;
  std::string decode(const BitStream& bits) const;
  Method method() const { return method_; }

 private:
  Method method_ = Method::kSixbit;
  std::optional<HuffmanCode> huffman_;
};

/// Folds the training text to the 6-bit alphabet and adds one to every
/// alphabet symbol's count, so every foldable character has a codeword.
HuffmanCode train_huffman(const std::vector<std::string>& training_texts);

/// Sends each text as its own frame; text i uses seed derive_seed(seed, {i}).
TextRunStats run_text_link(const std::vector<std::string>& texts, const TextCoder& coder, const Modulation& modulation,
                           const EndToEndGain& gain, const LinkBudget& budget, std::uint64_t seed);

/// Computes every sweep record. Points are independent and spread over
/// `jobs` threads; the result is identical for any job count. When
/// cfg.output is set, per-point artifacts go to "<output>.points/".
std::vector<SweepRecord> run_sweep(const ExperimentConfig& cfg, int jobs = 1);

/// run_sweep, then writes the CSV atomically along with "<csv>.tables.json"
/// (Huffman and 6-bit tables). Nothing is written if any point fails.
std::vector<SweepRecord> run_sweep_to_file(ExperimentConfig cfg, const std::filesystem::path& csv, int jobs = 1);

std::string point_name(double ratio, const Quantization& bits);

std::string records_to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> records_from_csv(std::string_view csv);
void write_csv_atomic(const std::vector<SweepRecord>& records, const std::filesystem::path& path);
std::vector<SweepRecord> read_csv(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double; "inf"/"-inf" for infinities.
std::string format_double(double v);
double parse_double(std::string_view s);

std::vector<std::string> read_lines(const std::filesystem::path& path);

}  // namespace rislink
