// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace rislink {

struct Triplet {
  std::string source;
  std::string relation;
  std::string target;
  bool operator==(const Triplet&) const = default;
  auto operator<=>(const Triplet&) const = default;
};

/// Directed graph with textual node and edge attributes; at most one edge
/// per ordered node pair.
class KnowledgeGraph {
 public:
  struct Edge {
    std::size_t source;
    std::size_t target;
    std::string relation;
  };

  std::size_t add_node(std::string attribute);
  /// Index of the node with this exact attribute, adding it if absent.
  std::size_t intern_node(const std::string& attribute);
  /// Throws std::invalid_argument for out-of-range indices or a duplicate ordered pair.
  void add_edge(std::size_t source, std::size_t target, std::string relation);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Triplet> triplets() const;

  static KnowledgeGraph from_triplets(const std::vector<Triplet>& triplets);

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
};

/// Accepts {"nodes": [...], "edges": [[src, dst, rel], ...]} or a bare list of
/// [source, relation, target] triplets (also under a "triplets" key).
KnowledgeGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const KnowledgeGraph& g);

KnowledgeGraph load_graph(const std::filesystem::path& path);
/// A JSON array of graphs (each in either accepted form).
std::vector<KnowledgeGraph> load_graphs(const std::filesystem::path& path);

/// Either a single graph or a JSON array of graphs.
std::vector<KnowledgeGraph> load_graph_file(const std::filesystem::path& path);

/// Flattens triplets to "source | relation | target" lines for the text baselines.
std::string linearize_graph(const KnowledgeGraph& g);
/// Inverse of linearize_graph; malformed lines are skipped.
KnowledgeGraph parse_linearized_graph(const std::string& text);

}  // namespace rislink
