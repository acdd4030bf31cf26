// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/huffman.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace rislink {

namespace {

struct Node {
  std::uint64_t count;
  unsigned char min_symbol;
  std::vector<unsigned char> symbols;
};

struct HeavierFirst {
  bool operator()(const Node& a, const Node& b) const {
    return std::tie(a.count, a.min_symbol) > std::tie(b.count, b.min_symbol);
  }
};

constexpr int kMaxCodeLength = 32;

}  // namespace

HuffmanCode HuffmanCode::build(const FrequencyTable& frequencies) {
  std::priority_queue<Node, std::vector<Node>, HeavierFirst> heap;
  std::map<unsigned char, int> length;
  for (const auto& [symbol, count] : frequencies) {
    if (count > 0) {
      heap.push({count, symbol, {symbol}});
      length[symbol] = 0;
    }
  }
  if (heap.size() < 2) {
    throw std::invalid_argument("Huffman code needs at least two symbols with positive counts");
  }
  while (heap.size() > 1) {
    Node a = heap.top();
    heap.pop();
    Node b = heap.top();
    heap.pop();
    for (auto s : a.symbols) ++length[s];
    for (auto s : b.symbols) ++length[s];
    a.symbols.insert(a.symbols.end(), b.symbols.begin(), b.symbols.end());
    heap.push({a.count + b.count, std::min(a.min_symbol, b.min_symbol), std::move(a.symbols)});
  }

  std::vector<std::pair<int, unsigned char>> order;
  for (const auto& [symbol, len] : length) {
    if (len > kMaxCodeLength) {
      throw std::invalid_argument("Huffman code length exceeds 32 bits");
    }
    order.emplace_back(len, symbol);
  }
  std::sort(order.begin(), order.end());

  HuffmanCode code;
  code.frequencies_ = frequencies;
  std::uint64_t next = 0;
  int prev_len = order.front().first;
  for (const auto& [len, symbol] : order) {
    next <<= (len - prev_len);
    prev_len = len;
    code.codewords_[symbol] = {static_cast<std::uint32_t>(next), len};
    ++next;
  }
  return code;
}

std::map<unsigned char, int> HuffmanCode::lengths() const {
  std::map<unsigned char, int> out;
  for (const auto& [symbol, cw] : codewords_) out[symbol] = cw.length;
  return out;
}

double HuffmanCode::expected_length() const {
  double total = 0.0;
  double weighted = 0.0;
  for (const auto& [symbol, cw] : codewords_) {
    const auto count = static_cast<double>(frequencies_.at(symbol));
    total += count;
    weighted += count * cw.length;
  }
  return weighted / total;
}

BitStream HuffmanCode::encode(std::string_view text) const {
  BitStream bits;
  for (char ch : text) {
    const auto it = codewords_.find(static_cast<unsigned char>(ch));
    if (it == codewords_.end()) {
      throw std::invalid_argument(std::string("character '") + ch + "' has no Huffman codeword");
    }
    for (int b = it->second.length - 1; b >= 0; --b) {
      bits.push_back(static_cast<std::uint8_t>((it->second.bits >> b) & 1u));
    }
  }
  return bits;
}

std::string HuffmanCode::decode(const BitStream& bits) const {
  std::map<std::pair<int, std::uint32_t>, unsigned char> lookup;
  for (const auto& [symbol, cw] : codewords_) lookup[{cw.length, cw.bits}] = symbol;

  std::string out;
  std::uint32_t acc = 0;
  int len = 0;
  for (auto bit : bits) {
    acc = (acc << 1) | (bit & 1u);
    ++len;
    const auto it = lookup.find({len, acc});
    if (it != lookup.end()) {
      out.push_back(static_cast<char>(it->second));
      acc = 0;
      len = 0;
    } else if (len >= kMaxCodeLength) {
      acc = 0;
      len = 0;
    }
  }
  return out;
}

nlohmann::json HuffmanCode::to_json() const {
  nlohmann::json table = nlohmann::json::array();
  for (const auto& [symbol, cw] : codewords_) {
    std::string code;
    for (int b = cw.length - 1; b >= 0; --b) code.push_back(((cw.bits >> b) & 1u) ? '1' : '0');
    table.push_back({{"symbol", static_cast<int>(symbol)}, {"count", frequencies_.at(symbol)}, {"code", code}});
  }
  return {{"kind", "huffman"}, {"table", std::move(table)}};
}

HuffmanCode HuffmanCode::from_json(const nlohmann::json& j) {
  FrequencyTable freqs;
  for (const auto& e : j.at("table")) {
    const int symbol = e.at("symbol").get<int>();
    if (symbol < 0 || symbol > 255) {
      throw std::runtime_error("Huffman table symbol out of byte range");
    }
    freqs[static_cast<unsigned char>(symbol)] = e.at("count").get<std::uint64_t>();
  }
  HuffmanCode code = build(freqs);
  for (const auto& e : j.at("table")) {
    const auto& cw = code.codewords_.at(static_cast<unsigned char>(e.at("symbol").get<int>()));
    std::string expected;
    for (int b = cw.length - 1; b >= 0; --b) expected.push_back(((cw.bits >> b) & 1u) ? '1' : '0');
    if (e.at("code").get<std::string>() != expected) {
      throw std::runtime_error("serialized Huffman codewords do not match their frequency table");
    }
  }
  return code;
}

FrequencyTable count_symbols(std::string_view text) {
  FrequencyTable freqs;
  for (char ch : text) ++freqs[static_cast<unsigned char>(ch)];
  return freqs;
}

double entropy_bits(const FrequencyTable& frequencies) {
  double total = 0.0;
  for (const auto& [s, c] : frequencies) total += static_cast<double>(c);
  double h = 0.0;
  for (const auto& [s, c] : frequencies) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

}  // namespace rislink
