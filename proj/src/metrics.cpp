// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

namespace rislink {

Tokens tokenize(std::string_view text) {
  Tokens out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current)), current.clear();
  };
  for (char ch : text) {
    const auto uc = static_cast<unsigned char>(ch);
    if (std::isspace(uc)) {
      flush();
    } else if (std::ispunct(uc)) {
      flush();
      out.emplace_back(1, ch);
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return out;
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts ngrams(const Tokens& tokens, std::size_t n) {
  NgramCounts counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

struct BleuStats {
  std::vector<std::size_t> matched;
  std::vector<std::size_t> total;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;

  explicit BleuStats(int max_n) : matched(static_cast<std::size_t>(max_n)), total(static_cast<std::size_t>(max_n)) {}

  void add(const Tokens& candidate, const Tokens& reference) {
    candidate_length += candidate.size();
    reference_length += reference.size();
    for (std::size_t n = 1; n <= matched.size(); ++n) {
      const auto cand = ngrams(candidate, n);
      const auto ref = ngrams(reference, n);
      for (const auto& [gram, count] : cand) {
        total[n - 1] += count;
        const auto it = ref.find(gram);
        if (it != ref.end()) matched[n - 1] += std::min(count, it->second);
      }
    }
  }

  double score() const {
    if (candidate_length == 0) return 0.0;
    double log_sum = 0.0;
    int orders = 0;
    for (std::size_t n = 0; n < matched.size(); ++n) {
      if (total[n] == 0) continue;
      if (matched[n] == 0) return 0.0;
      log_sum += std::log(static_cast<double>(matched[n]) / static_cast<double>(total[n]));
      ++orders;
    }
    const double c = static_cast<double>(candidate_length);
    const double r = static_cast<double>(reference_length);
    const double brevity = c >= r ? 1.0 : std::exp(1.0 - r / c);
    return brevity * std::exp(log_sum / orders);
  }
};

}  // namespace

double corpus_bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int max_n) {
  if (candidates.size() != references.size()) {
    throw std::invalid_argument("corpus BLEU needs one reference per candidate");
  }
  if (max_n < 1) throw std::invalid_argument("BLEU order must be positive");
  BleuStats stats(max_n);
  for (std::size_t i = 0; i < candidates.size(); ++i) stats.add(candidates[i], references[i]);
  return stats.score();
}

double bleu(const Tokens& candidate, const Tokens& reference, int max_n) {
  return corpus_bleu({candidate}, {reference}, max_n);
}

double relative_bleu(double bleu_score, double max_bleu) {
  if (!(max_bleu > 0.0)) throw std::invalid_argument("max_bleu must be positive");
  return bleu_score / max_bleu;
}

double relative_bleu(const Tokens& candidate, const Tokens& reference, double max_bleu) {
  return relative_bleu(bleu(candidate, reference), max_bleu);
}

namespace {

std::string normalize_attribute(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  std::string out = s.substr(b, e - b + 1);
  for (auto& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

Triplet normalized(const Triplet& t) {
  return {normalize_attribute(t.source), normalize_attribute(t.relation), normalize_attribute(t.target)};
}

std::size_t count_matches(const KnowledgeGraph& source, const KnowledgeGraph& decoded) {
  std::map<Triplet, std::size_t> available;
  for (const auto& t : source.triplets()) ++available[normalized(t)];
  std::size_t matches = 0;
  for (const auto& t : decoded.triplets()) {
    auto it = available.find(normalized(t));
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++matches;
    }
  }
  return matches;
}

TripletScore score_from_counts(std::size_t matches, std::size_t n_source, std::size_t n_decoded) {
  if (n_source == 0 && n_decoded == 0) return {1.0, 1.0, 1.0, 0};
  if (n_source == 0 || n_decoded == 0) return {0.0, 0.0, 0.0, 0};
  TripletScore s;
  s.matches = matches;
  s.precision = static_cast<double>(matches) / static_cast<double>(n_decoded);
  s.recall = static_cast<double>(matches) / static_cast<double>(n_source);
  s.f1 = matches == 0 ? 0.0 : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

}  // namespace

TripletScore triplet_f1(const KnowledgeGraph& source, const KnowledgeGraph& decoded) {
  return score_from_counts(count_matches(source, decoded), source.edges().size(), decoded.edges().size());
}

TripletScore triplet_f1(const std::vector<KnowledgeGraph>& sources, const std::vector<KnowledgeGraph>& decoded) {
  if (sources.size() != decoded.size()) {
    throw std::invalid_argument("triplet F1 needs one decoded graph per source graph");
  }
  std::size_t matches = 0, n_source = 0, n_decoded = 0;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    matches += count_matches(sources[i], decoded[i]);
    n_source += sources[i].edges().size();
    n_decoded += decoded[i].edges().size();
  }
  return score_from_counts(matches, n_source, n_decoded);
}

double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("embedding dimensions differ");
  const double dot = std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
  const double na = std::sqrt(std::inner_product(a.begin(), a.end(), a.begin(), 0.0));
  const double nb = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
  if (!(na > 0.0) || !(nb > 0.0)) throw std::invalid_argument("cosine similarity of a zero vector");
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

double mean_cosine_similarity(const std::vector<EmbeddingVector>& a, const std::vector<EmbeddingVector>& b) {
  if (a.size() != b.size() || a.empty()) {
    throw std::invalid_argument("embedding lists must be non-empty and aligned");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += cosine_similarity(a[i], b[i]);
  return sum / static_cast<double>(a.size());
}

std::vector<EmbeddingVector> load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open embedding file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed embedding file " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("vectors") || !j.at("vectors").is_array()) {
    throw std::runtime_error(path.string() + ": embedding JSON needs dim and vectors");
  }
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<EmbeddingVector> out;
  for (const auto& v : j.at("vectors")) {
    if (!v.is_array() || v.size() != dim) {
      throw std::runtime_error(path.string() + ": embedding " + std::to_string(out.size()) + " has " +
                               std::to_string(v.is_array() ? v.size() : 0) + " entries, expected " +
                               std::to_string(dim));
    }
    out.push_back(v.get<EmbeddingVector>());
  }
  return out;
}

std::size_t bit_errors(const BitStream& sent, const BitStream& received) {
  if (sent.size() != received.size()) {
    throw std::invalid_argument("bit streams differ in length (" + std::to_string(sent.size()) + " vs " +
                                std::to_string(received.size()) + ")");
  }
  std::size_t errors = 0;
  for (std::size_t i = 0; i < sent.size(); ++i) errors += (sent[i] & 1u) != (received[i] & 1u);
  return errors;
}

double bit_error_rate(const BitStream& sent, const BitStream& received) {
  const auto errors = bit_errors(sent, received);
  return sent.empty() ? 0.0 : static_cast<double>(errors) / static_cast<double>(sent.size());
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] != b[j - 1]);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double char_error_rate(std::string_view sent, std::string_view received) {
  if (sent.empty()) return received.empty() ? 0.0 : 1.0;
  return static_cast<double>(levenshtein(sent, received)) / static_cast<double>(sent.size());
}

}  // namespace rislink
