// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rislink/bitstream.hpp"
#include "rislink/graph.hpp"

namespace rislink {

using Tokens = std::vector<std::string>;

/// Detaches ASCII punctuation into its own tokens, then splits on whitespace.
/// Case is preserved.
Tokens tokenize(std::string_view text);

/// BLEU with uniform weights over 1..N-gram clipped precisions and the brevity
/// penalty. N is capped at the candidate length (orders with no candidate
/// n-grams are skipped). No smoothing: any zero precision gives 0.
double bleu(const Tokens& candidate, const Tokens& reference, int max_n = 4);

/// Corpus BLEU: clipped counts and lengths summed over all pairs before the
/// precisions and brevity penalty are formed.
double corpus_bleu(const std::vector<Tokens>& candidates, const std::vector<Tokens>& references, int max_n = 4);

/// bleu / max_bleu. Throws std::invalid_argument for max_bleu <= 0.
double relative_bleu(double bleu_score, double max_bleu);
double relative_bleu(const Tokens& candidate, const Tokens& reference, double max_bleu);

struct TripletScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matches = 0;
};

/// Exact triplet matching after trim + ASCII case-fold, each source triplet
/// consumable once. Both empty -> all 1; exactly one empty -> all 0.
TripletScore triplet_f1(const KnowledgeGraph& source, const KnowledgeGraph& decoded);

/// Aggregates matches and sizes over graph pairs (micro average).
TripletScore triplet_f1(const std::vector<KnowledgeGraph>& sources, const std::vector<KnowledgeGraph>& decoded);

using EmbeddingVector = std::vector<double>;

/// Throws std::invalid_argument for zero-norm or mismatched inputs.
double cosine_similarity(const EmbeddingVector& a, const EmbeddingVector& b);

/// Mean pairwise cosine over aligned lists.
double mean_cosine_similarity(const std::vector<EmbeddingVector>& a, const std::vector<EmbeddingVector>& b);

/// {"dim": int, "vectors": [[...], ...]}; throws on ragged or mismatched dimensions.
std::vector<EmbeddingVector> load_embeddings(const std::filesystem::path& path);

/// Hamming fraction; throws std::invalid_argument on length mismatch. Empty -> 0.
double bit_error_rate(const BitStream& sent, const BitStream& received);
std::size_t bit_errors(const BitStream& sent, const BitStream& received);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// levenshtein(sent, received) / |sent|; an empty reference scores 0 against
/// an empty hypothesis and 1 otherwise.
double char_error_rate(std::string_view sent, std::string_view received);

}  // namespace rislink
