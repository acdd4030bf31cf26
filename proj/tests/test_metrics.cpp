// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "rislink/graph.hpp"
#include "rislink/metrics.hpp"

namespace rislink {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "rislink_metrics_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(Tokenize, DetachesPunctuation) {
  EXPECT_EQ(tokenize("Hello, world."), (Tokens{"Hello", ",", "world", "."}));
  EXPECT_EQ(tokenize("  a  b\n"), (Tokens{"a", "b"}));
  EXPECT_TRUE(tokenize("").empty());
}

TEST(Bleu, Anchors) {
  Tokens x = tokenize("the quick brown fox jumps over the lazy dog");
  EXPECT_DOUBLE_EQ(bleu(x, x), 1.0);
  EXPECT_EQ(bleu(tokenize("alpha beta"), tokenize("gamma delta epsilon")), 0.0);
  EXPECT_NEAR(bleu(tokenize("the cat"), tokenize("the cat sat")), std::exp(1.0 - 1.5), 1e-12);
  EXPECT_NEAR(bleu(tokenize("the cat"), tokenize("the cat sat")), 0.6065, 1e-4);
}

TEST(Bleu, FullOrderHandExample) {
  // p1 = 5/6, p2 = 3/5, p3 = 2/4, p4 = 1/3, equal lengths
  double got = bleu(tokenize("the cat sat on the mat"), tokenize("the cat sat on a mat"));
  EXPECT_NEAR(got, std::pow(1.0 / 12.0, 0.25), 1e-12);
}

TEST(Bleu, ClipsRepeatedWords) {
  // unigram "the" x4 against a single reference "the": p1 = 1/4, no bigram matches
  EXPECT_EQ(bleu(tokenize("the the the the"), tokenize("the cat")), 0.0);
  EXPECT_NEAR(bleu(tokenize("the the the the"), tokenize("the cat"), 1), 0.25, 1e-12);
}

TEST(Bleu, EmptyCandidateScoresZero) {
  EXPECT_EQ(bleu({}, tokenize("a b")), 0.0);
}

TEST(CorpusBleu, PoolsCounts) {
  std::vector<Tokens> c{tokenize("the cat"), tokenize("a dog")};
  std::vector<Tokens> r{tokenize("the cat"), tokenize("the dog")};
  EXPECT_NEAR(corpus_bleu(c, r, 2), std::sqrt(0.75 * 0.5), 1e-12);
  Tokens a = tokenize("the cat sat on the mat");
  Tokens b = tokenize("the cat sat on a mat");
  EXPECT_DOUBLE_EQ(corpus_bleu({a}, {b}), bleu(a, b));
  EXPECT_THROW(corpus_bleu({a}, {}), std::invalid_argument);
}

TEST(RelativeBleu, Anchors) {
  EXPECT_DOUBLE_EQ(relative_bleu(0.6, 0.6), 1.0);
  EXPECT_EQ(relative_bleu(0.0, 0.6), 0.0);
  EXPECT_DOUBLE_EQ(relative_bleu(0.3, 0.6), 0.5);
  EXPECT_THROW(relative_bleu(0.3, 0.0), std::invalid_argument);
  Tokens x = tokenize("a b c d");
  EXPECT_DOUBLE_EQ(relative_bleu(x, x, 0.6), 1.0 / 0.6);
}

TEST(TripletF1, Anchors) {
  KnowledgeGraph g = KnowledgeGraph::from_triplets({{"a", "r", "b"}, {"b", "s", "c"}, {"c", "t", "a"}});
  TripletScore same = triplet_f1(g, g);
  EXPECT_EQ(same.f1, 1.0);
  EXPECT_EQ(same.precision, 1.0);
  EXPECT_EQ(same.recall, 1.0);

  KnowledgeGraph partial = KnowledgeGraph::from_triplets({{"a", "r", "b"}, {"b", "s", "c"}, {"x", "y", "z"}});
  TripletScore p = triplet_f1(g, partial);
  EXPECT_NEAR(p.precision, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.recall, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(p.f1, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(p.matches, 2u);

  KnowledgeGraph other = KnowledgeGraph::from_triplets({{"p", "q", "r"}});
  TripletScore d = triplet_f1(g, other);
  EXPECT_EQ(d.f1, 0.0);
  EXPECT_EQ(d.precision, 0.0);
  EXPECT_EQ(d.recall, 0.0);

  KnowledgeGraph empty;
  EXPECT_EQ(triplet_f1(empty, empty).f1, 1.0);
  EXPECT_EQ(triplet_f1(g, empty).f1, 0.0);
  EXPECT_EQ(triplet_f1(empty, g).f1, 0.0);
}

TEST(TripletF1, NormalizesCaseAndWhitespace) {
  KnowledgeGraph a = KnowledgeGraph::from_triplets({{"Alan Bean", "mission", "Apollo 12"}});
  KnowledgeGraph b = KnowledgeGraph::from_triplets({{" alan bean", "MISSION ", "apollo 12"}});
  EXPECT_EQ(triplet_f1(a, b).f1, 1.0);
}

TEST(TripletF1, MicroAverage) {
  KnowledgeGraph g1 = KnowledgeGraph::from_triplets({{"a", "r", "b"}, {"b", "r", "c"}});
  KnowledgeGraph g2 = KnowledgeGraph::from_triplets({{"x", "r", "y"}});
  KnowledgeGraph d1 = KnowledgeGraph::from_triplets({{"a", "r", "b"}});
  KnowledgeGraph d2 = KnowledgeGraph::from_triplets({{"x", "r", "y"}, {"y", "r", "z"}});
  TripletScore s = triplet_f1(std::vector{g1, g2}, std::vector{d1, d2});
  EXPECT_EQ(s.matches, 2u);
  EXPECT_NEAR(s.precision, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(s.recall, 2.0 / 3.0, 1e-15);
}

TEST(Cosine, Anchors) {
  EXPECT_NEAR(cosine_similarity({1, 2, 3}, {1, 2, 3}), 1.0, 1e-15);
  EXPECT_EQ(cosine_similarity({1, 0}, {0, 1}), 0.0);
  EXPECT_NEAR(cosine_similarity({1, 0}, {1, 1}), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(cosine_similarity({0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(cosine_similarity({1, 0}, {1, 1, 1}), std::invalid_argument);
}

TEST(Cosine, ScaleInvariant) {
  EmbeddingVector a{0.3, -1.2, 4.0, 0.5};
  EmbeddingVector b{1.0, 0.1, -0.7, 2.0};
  double base = cosine_similarity(a, b);
  for (double s : {0.5, 2.0, 8.0, 1024.0}) {
    EmbeddingVector sa = a;
    for (auto& v : sa) v *= s;
    EXPECT_EQ(cosine_similarity(sa, b), base) << s;
  }
}

TEST(BitErrors, Anchors) {
  BitStream a{0, 1, 1, 0};
  EXPECT_EQ(bit_error_rate(a, a), 0.0);
  EXPECT_EQ(bit_error_rate(a, {1, 0, 0, 1}), 1.0);
  EXPECT_EQ(bit_errors(a, {0, 1, 0, 0}), 1u);
  EXPECT_THROW(bit_error_rate(a, {0}), std::invalid_argument);
  EXPECT_EQ(bit_error_rate({}, {}), 0.0);
}

TEST(CharError, Anchors) {
  EXPECT_NEAR(char_error_rate("abc", "axc"), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(char_error_rate("abc", "abc"), 0.0);
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(levenshtein("", "abc"), 3u);
  EXPECT_EQ(char_error_rate("", ""), 0.0);
  EXPECT_EQ(char_error_rate("", "x"), 1.0);
}

TEST(Graph, StructureAndErrors) {
  KnowledgeGraph g;
  std::size_t a = g.add_node("a");
  std::size_t b = g.add_node("b");
  g.add_edge(a, b, "r");
  EXPECT_THROW(g.add_edge(a, b, "s"), std::invalid_argument);
  EXPECT_NO_THROW(g.add_edge(b, a, "s"));
  EXPECT_THROW(g.add_edge(a, 7, "s"), std::invalid_argument);
  EXPECT_EQ(g.intern_node("a"), a);
  EXPECT_EQ(g.triplets().size(), 2u);
}

TEST(Graph, FourTripletFile) {
  fs::path p = scratch("four.json");
  std::ofstream(p) << R"([["alan bean","birth place","wheeler"],["alan bean","mission","apollo 12"],
                         ["apollo 12","operator","nasa"],["alan bean","occupation","test pilot"]])";
  KnowledgeGraph g = load_graph(p);
  EXPECT_LE(g.nodes().size(), 8u);
  EXPECT_EQ(g.nodes().size(), 5u);
  EXPECT_EQ(g.edges().size(), 4u);

  std::ofstream(p) << "[]";
  KnowledgeGraph e = load_graph(p);
  EXPECT_TRUE(e.nodes().empty());
  EXPECT_TRUE(e.edges().empty());
}

TEST(Graph, JsonFormsAgree) {
  nlohmann::json bare = nlohmann::json::parse(R"([["a","r","b"],["b","s","c"]])");
  nlohmann::json keyed = nlohmann::json{{"triplets", bare}};
  nlohmann::json nodes = nlohmann::json::parse(R"({"nodes":["a","b","c"],"edges":[[0,1,"r"],[1,2,"s"]]})");
  auto t = graph_from_json(bare).triplets();
  EXPECT_EQ(graph_from_json(keyed).triplets(), t);
  EXPECT_EQ(graph_from_json(nodes).triplets(), t);
  EXPECT_EQ(graph_from_json(graph_to_json(graph_from_json(bare))).triplets(), t);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"nodes":["a"],"edges":[[0,3,"r"]]})")),
               std::runtime_error);
}

TEST(Graph, LinearizeRoundTrip) {
  KnowledgeGraph g = KnowledgeGraph::from_triplets({{"aarhus airport", "city served", "aarhus"},
                                                    {"aarhus", "country", "denmark"}});
  std::string text = linearize_graph(g);
  EXPECT_EQ(text, "aarhus airport | city served | aarhus\naarhus | country | denmark\n");
  EXPECT_EQ(parse_linearized_graph(text).triplets(), g.triplets());
  EXPECT_EQ(parse_linearized_graph("garbage line\na | b | c\n").triplets().size(), 1u);
}

TEST(Graph, SampleCorpusGraphs) {
  auto graphs = load_graphs(fs::path(RISLINK_DATA_DIR) / "graphs_test.json");
  EXPECT_EQ(graphs.size(), 100u);
  for (const auto& g : graphs) EXPECT_FALSE(g.edges().empty());
}

TEST(Graph, GraphFileAcceptsOneOrMany) {
  EXPECT_EQ(load_graph_file(fs::path(RISLINK_DATA_DIR) / "graphs_test.json").size(), 100u);
  fs::path p = scratch("one.json");
  std::ofstream(p) << R"([["a","r","b"]])";
  ASSERT_EQ(load_graph_file(p).size(), 1u);
  EXPECT_EQ(load_graph_file(p)[0].edges().size(), 1u);
  std::ofstream(p) << R"({"nodes":["a","b"],"edges":[[0,1,"r"]]})";
  EXPECT_EQ(load_graph_file(p).size(), 1u);
  std::ofstream(p) << R"([{"triplets":[["a","r","b"]]}, []])";
  EXPECT_EQ(load_graph_file(p).size(), 2u);
}

TEST(Embeddings, LoadAndValidate) {
  fs::path p = scratch("emb.json");
  nlohmann::json j;
  j["dim"] = 384;
  j["vectors"] = {std::vector<double>(384, 0.5), std::vector<double>(384, -0.25)};
  std::ofstream(p) << j.dump();
  auto v = load_embeddings(p);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].size(), 384u);
  EXPECT_NEAR(mean_cosine_similarity(v, v), 1.0, 1e-12);

  j["vectors"][1] = std::vector<double>(383, 1.0);
  std::ofstream(p) << j.dump();
  EXPECT_THROW(load_embeddings(p), std::runtime_error);
}

}  // namespace
}  // namespace rislink
