// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace rislink {

std::size_t KnowledgeGraph::add_node(std::string attribute) {
  nodes_.push_back(std::move(attribute));
  return nodes_.size() - 1;
}

std::size_t KnowledgeGraph::intern_node(const std::string& attribute) {
  const auto it = std::find(nodes_.begin(), nodes_.end(), attribute);
  if (it != nodes_.end()) {
    return static_cast<std::size_t>(it - nodes_.begin());
  }
  return add_node(attribute);
}

void KnowledgeGraph::add_edge(std::size_t source, std::size_t target, std::string relation) {
  if (source >= nodes_.size() || target >= nodes_.size()) {
    throw std::invalid_argument("edge (" + std::to_string(source) + ", " + std::to_string(target) +
                                ") references a missing node");
  }
  for (const auto& e : edges_) {
    if (e.source == source && e.target == target) {
      throw std::invalid_argument("duplicate edge for ordered pair (" + std::to_string(source) + ", " +
                                  std::to_string(target) + ")");
    }
  }
  edges_.push_back({source, target, std::move(relation)});
}

std::vector<Triplet> KnowledgeGraph::triplets() const {
  std::vector<Triplet> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({nodes_[e.source], e.relation, nodes_[e.target]});
  return out;
}

KnowledgeGraph KnowledgeGraph::from_triplets(const std::vector<Triplet>& triplets) {
  KnowledgeGraph g;
  for (const auto& t : triplets) {
    const auto s = g.intern_node(t.source);
    const auto d = g.intern_node(t.target);
    g.add_edge(s, d, t.relation);
  }
  return g;
}

namespace {

std::vector<Triplet> triplets_from_json(const nlohmann::json& list) {
  std::vector<Triplet> out;
  for (const auto& t : list) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string() || !t[2].is_string()) {
      throw std::runtime_error("triplet entries must be [source, relation, target] strings");
    }
    out.push_back({t[0].get<std::string>(), t[1].get<std::string>(), t[2].get<std::string>()});
  }
  return out;
}

}  // namespace

KnowledgeGraph graph_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    return KnowledgeGraph::from_triplets(triplets_from_json(j));
  }
  if (!j.is_object()) {
    throw std::runtime_error("graph JSON must be an object or a triplet list");
  }
  if (j.contains("triplets")) {
    return KnowledgeGraph::from_triplets(triplets_from_json(j.at("triplets")));
  }
  if (!j.contains("nodes") || !j.contains("edges")) {
    throw std::runtime_error("graph JSON needs nodes and edges");
  }
  KnowledgeGraph g;
  for (const auto& n : j.at("nodes")) {
    if (!n.is_string()) throw std::runtime_error("graph node attributes must be strings");
    g.add_node(n.get<std::string>());
  }
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
        !e[2].is_string()) {
      throw std::runtime_error("graph edges must be [source index, target index, relation]");
    }
    try {
      g.add_edge(e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(std::string("invalid graph edge: ") + err.what());
    }
  }
  return g;
}

nlohmann::json graph_to_json(const KnowledgeGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.source, e.target, e.relation});
  return {{"nodes", g.nodes()}, {"edges", std::move(edges)}};
}

namespace {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
  }
}

}  // namespace

KnowledgeGraph load_graph(const std::filesystem::path& path) { return graph_from_json(read_json(path)); }

std::vector<KnowledgeGraph> load_graphs(const std::filesystem::path& path) {
  const auto j = read_json(path);
  if (!j.is_array()) throw std::runtime_error(path.string() + ": expected a JSON array of graphs");
  std::vector<KnowledgeGraph> out;
  for (const auto& g : j) out.push_back(graph_from_json(g));
  return out;
}

std::vector<KnowledgeGraph> load_graph_file(const std::filesystem::path& path) {
  const auto j = read_json(path);
  // A list of graphs has array or object elements whose own elements are not strings.
  const bool many = j.is_array() && !j.empty() &&
                    (j.front().is_object() || (j.front().is_array() && (j.front().empty() || j.front().front().is_array())));
  if (!many) return {graph_from_json(j)};
  std::vector<KnowledgeGraph> out;
  for (const auto& g : j) out.push_back(graph_from_json(g));
  return out;
}

std::string linearize_graph(const KnowledgeGraph& g) {
  std::string out;
  for (const auto& t : g.triplets()) out += t.source + " | " + t.relation + " | " + t.target + "\n";
  return out;
}

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

KnowledgeGraph parse_linearized_graph(const std::string& text) {
  KnowledgeGraph g;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto a = line.find('|');
    if (a == std::string::npos) continue;
    const auto b = line.find('|', a + 1);
    if (b == std::string::npos || line.find('|', b + 1) != std::string::npos) continue;
    const std::string s = trim(line.substr(0, a));
    const std::string r = trim(line.substr(a + 1, b - a - 1));
    const std::string t = trim(line.substr(b + 1));
    const auto si = g.intern_node(s);
    const auto ti = g.intern_node(t);
    bool duplicate = false;
    for (const auto& e : g.edges()) duplicate = duplicate || (e.source == si && e.target == ti);
    if (!duplicate) g.add_edge(si, ti, r);
  }
  return g;
}

}  // namespace rislink
