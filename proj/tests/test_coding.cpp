// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "rislink/huffman.hpp"
#include "rislink/link.hpp"
#include "rislink/metrics.hpp"
#include "rislink/modulation.hpp"
#include "rislink/sixbit.hpp"

namespace rislink {
namespace {

using cd = std::complex<double>;

// Smallest sum p_s l_s over all length vectors meeting the Kraft inequality.
double brute_force_optimum(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> len(n, 1);
  double best = 1e300;
  while (true) {
    double kraft = 0.0, cost = 0.0;
    for (int i = 0; i < n; ++i) {
      kraft += std::ldexp(1.0, -len[i]);
      cost += p[i] * len[i];
    }
    if (kraft <= 1.0 + 1e-12) best = std::min(best, cost);
    int i = 0;
    while (i < n && ++len[i] > n - 1) len[i++] = 1;
    if (i == n) break;
  }
  return best;
}

bool prefix_free(const HuffmanCode& code) {
  for (const auto& [a, ca] : code.codewords()) {
    for (const auto& [b, cb] : code.codewords()) {
      if (a == b || ca.length > cb.length) continue;
      if ((cb.bits >> (cb.length - ca.length)) == ca.bits) return false;
    }
  }
  return true;
}

TEST(Huffman, FourSymbolAnchor) {
  HuffmanCode code = HuffmanCode::build({{'a', 4}, {'b', 2}, {'c', 1}, {'d', 1}});
  auto len = code.lengths();
  EXPECT_EQ(len['a'], 1);
  EXPECT_EQ(len['b'], 2);
  EXPECT_EQ(len['c'], 3);
  EXPECT_EQ(len['d'], 3);
  EXPECT_DOUBLE_EQ(code.expected_length(), 1.75);
  EXPECT_DOUBLE_EQ(brute_force_optimum({0.5, 0.25, 0.125, 0.125}), 1.75);
  EXPECT_TRUE(prefix_free(code));
}

TEST(Huffman, BalancedAndBinary) {
  HuffmanCode u = HuffmanCode::build({{'w', 3}, {'x', 3}, {'y', 3}, {'z', 3}});
  for (const auto& [s, l] : u.lengths()) EXPECT_EQ(l, 2) << s;
  HuffmanCode two = HuffmanCode::build({{'a', 1}, {'b', 1}});
  EXPECT_EQ(two.lengths(), (std::map<unsigned char, int>{{'a', 1}, {'b', 1}}));
  EXPECT_THROW(HuffmanCode::build({{'a', 5}}), std::invalid_argument);
  EXPECT_THROW(HuffmanCode::build({{'a', 5}, {'b', 0}}), std::invalid_argument);
}

TEST(Huffman, CanonicalCodewords) {
  HuffmanCode code = HuffmanCode::build({{'a', 4}, {'b', 2}, {'c', 1}, {'d', 1}});
  auto cw = code.codewords();
  EXPECT_EQ(cw['a'], (HuffmanCode::Codeword{0b0, 1}));
  EXPECT_EQ(cw['b'], (HuffmanCode::Codeword{0b10, 2}));
  EXPECT_EQ(cw['c'], (HuffmanCode::Codeword{0b110, 3}));
  EXPECT_EQ(cw['d'], (HuffmanCode::Codeword{0b111, 3}));
}

TEST(Huffman, OptimalOnSmallAlphabets) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_int_distribution<int> count(1, 40);
  for (int t = 0; t < 200; ++t) {
    FrequencyTable f;
    int n = size(rng);
    for (int i = 0; i < n; ++i) f[static_cast<unsigned char>('a' + i)] = count(rng);
    double total = 0;
    for (auto& [s, c] : f) total += c;
    std::vector<double> p;
    for (auto& [s, c] : f) p.push_back(c / total);
    HuffmanCode code = HuffmanCode::build(f);
    EXPECT_NEAR(code.expected_length(), brute_force_optimum(p), 1e-12);
    EXPECT_TRUE(prefix_free(code));
  }
}

TEST(Huffman, EntropyBounds) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> count(1, 1000);
  for (int t = 0; t < 50; ++t) {
    FrequencyTable f;
    for (int i = 0; i < 26; ++i) f[static_cast<unsigned char>('a' + i)] = count(rng);
    HuffmanCode code = HuffmanCode::build(f);
    double h = entropy_bits(f);
    EXPECT_LE(h, code.expected_length() + 1e-12);
    EXPECT_LT(code.expected_length(), h + 1.0);
    EXPECT_TRUE(prefix_free(code));
  }
}

TEST(Huffman, RoundTripAndErrors) {
  std::string text = "hello world";
  HuffmanCode code = HuffmanCode::build(count_symbols(text));
  BitStream bits = code.encode(text);
  EXPECT_EQ(code.decode(bits), text);
  EXPECT_TRUE(code.encode("").empty());
  EXPECT_EQ(code.decode({}), "");
  EXPECT_THROW(code.encode("hello!"), std::invalid_argument);
  // trailing partial codeword is dropped
  bits.pop_back();
  EXPECT_EQ(code.decode(bits), text.substr(0, text.size() - 1));
}

TEST(Huffman, EarlyFlipMayDesynchronize) {
  std::string text = "the quick brown fox jumps over the lazy dog near the riverbank";
  HuffmanCode code = HuffmanCode::build(count_symbols(text));
  BitStream bits = code.encode(text);
  std::size_t worst = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    BitStream b = bits;
    b[i] ^= 1;
    worst = std::max(worst, levenshtein(text, code.decode(b)));
  }
  EXPECT_GT(worst, 1u);
}

TEST(Huffman, JsonRoundTrip) {
  HuffmanCode code = HuffmanCode::build(count_symbols("abracadabra, alakazam"));
  HuffmanCode back = HuffmanCode::from_json(nlohmann::json::parse(code.to_json().dump()));
  EXPECT_EQ(back.codewords(), code.codewords());
  EXPECT_EQ(back.frequencies(), code.frequencies());

  nlohmann::json j = code.to_json();
  j["table"][0]["code"] = "0000000";
  EXPECT_THROW(HuffmanCode::from_json(j), std::runtime_error);
}

TEST(Sixbit, RoundTripAndLocality) {
  std::string text(kSixbitAlphabet);
  BitStream bits = sixbit_encode(text);
  EXPECT_EQ(bits.size(), 6 * text.size());
  EXPECT_EQ(sixbit_decode(bits), text);
  for (std::size_t i = 0; i < bits.size(); i += 7) {
    BitStream b = bits;
    b[i] ^= 1;
    std::string out = sixbit_decode(b);
    ASSERT_EQ(out.size(), text.size());
    std::size_t diff = 0;
    for (std::size_t k = 0; k < out.size(); ++k) diff += out[k] != text[k];
    EXPECT_EQ(diff, 1u);
  }
}

TEST(Sixbit, GroupingAndFolding) {
  BitStream thirteen(13, 0);
  EXPECT_EQ(sixbit_decode(thirteen), "aa");
  EXPECT_EQ(fold_to_sixbit_alphabet("Hello~World"), "hello?world");
  EXPECT_EQ(sixbit_decode(sixbit_encode("ABC")), "abc");
  EXPECT_EQ(sixbit_alphabet_json()["alphabet"].get<std::string>().size(), 64u);
  // index i is the MSB-first 6-bit value i
  BitStream z = sixbit_encode("z");
  EXPECT_EQ(z, (BitStream{0, 1, 1, 0, 0, 1}));
}

TEST(Qpsk, MappingAnchorsAndRoundTrip) {
  ModulatedFrame f = qpsk_modulate({0, 0, 1, 0, 0, 1, 1, 1});
  const double a = 1 / std::sqrt(2.0);
  ASSERT_EQ(f.symbols.cols(), 4);
  EXPECT_NEAR(std::abs(f.symbols.values(0, 0) - cd(a, a)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.symbols.values(0, 1) - cd(-a, a)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.symbols.values(0, 2) - cd(a, -a)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(f.symbols.values(0, 3) - cd(-a, -a)), 0.0, 1e-15);
  EXPECT_TRUE(rows_have_unit_power(f.symbols));

  std::mt19937_64 rng(30);
  std::bernoulli_distribution coin;
  for (std::size_t n : {0, 1, 2, 7, 100}) {
    BitStream b(n);
    for (auto& x : b) x = coin(rng);
    ModulatedFrame fr = qpsk_modulate(b);
    EXPECT_EQ(qpsk_demodulate(fr.symbols, fr.pad_bits), b);
  }
}

TEST(Qam16, RoundTripAndUnitPower) {
  Qam16 m;
  std::mt19937_64 rng(31);
  std::bernoulli_distribution coin;
  for (std::size_t n : {3, 4, 64, 401}) {
    BitStream b(n);
    for (auto& x : b) x = coin(rng);
    ModulatedFrame fr = m.modulate(b);
    EXPECT_TRUE(rows_have_unit_power(fr.symbols));
    EXPECT_EQ(m.demodulate(fr.symbols, fr), b);
  }
  // neighbors along an axis differ in one bit
  ModulatedFrame fr = m.modulate({0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 0, 0});
  Eigen::RowVectorXcd s = fr.symbols.values.row(0) / fr.row_scale * std::sqrt(10.0);
  EXPECT_NEAR(s(0).real(), -3, 1e-12);
  EXPECT_NEAR(s(1).real(), -1, 1e-12);
  EXPECT_NEAR(s(2).real(), 1, 1e-12);
  EXPECT_NEAR(s(3).real(), 3, 1e-12);
}

TEST(Modulation, Factory) {
  EXPECT_EQ(make_modulation("qpsk")->bits_per_symbol(), 2);
  EXPECT_EQ(make_modulation("qam16")->bits_per_symbol(), 4);
  EXPECT_THROW(make_modulation("bpsk"), std::invalid_argument);
}

TEST(Qpsk, BerMatchesClosedForm) {
  // With symbol SNR gamma each Gray bit sees Q(sqrt(gamma)).
  const double gamma = 10.0;
  const std::size_t bits = 4'000'000;
  std::mt19937_64 rng(32);
  BitStream b(bits);
  for (std::size_t i = 0; i < bits; i += 64) {
    std::uint64_t w = rng();
    for (std::size_t k = 0; k < 64 && i + k < bits; ++k) b[i + k] = (w >> k) & 1;
  }
  ModulatedFrame fr = qpsk_modulate(b);
  LinkBudget budget;
  budget.tx_power = 1.0;
  budget.noise_power = 1.0 / gamma;
  budget.w_tx = Eigen::VectorXcd::Ones(1);
  budget.w_rx = Eigen::VectorXcd::Ones(1);
  EndToEndGain g{cd(1, 0)};
  ASSERT_NEAR(snr(g, budget).linear, gamma, 1e-12);
  SymbolMatrix rx = equalize(transmit(fr.symbols, g, budget, 5), g, 1.0);
  double ber = bit_error_rate(b, qpsk_demodulate(rx, fr.pad_bits));
  double q = 0.5 * std::erfc(std::sqrt(gamma) / std::sqrt(2.0));
  EXPECT_NEAR(ber / q, 1.0, 0.05);
}

}  // namespace
}  // namespace rislink
