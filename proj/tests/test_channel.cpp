// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rislink/channel.hpp"

namespace rislink {
namespace {

using std::numbers::pi;

TEST(Wavelength, Anchors) {
  EXPECT_NEAR(wavelength(28e9), 0.01070687, 1e-8);
  EXPECT_DOUBLE_EQ(wavelength(299'792'458.0), 1.0);
  EXPECT_NEAR(wavelength(3e9), 0.0999308, 1e-7);
  EXPECT_THROW(wavelength(0.0), std::invalid_argument);
  EXPECT_THROW(wavelength(-1.0), std::invalid_argument);
}

TEST(PathLoss, Validate) {
  PathLossModel pl;
  EXPECT_NO_THROW(pl.validate());
  EXPECT_DOUBLE_EQ(pl.loss(10.0), 1e4);
  pl.exponent = 1.5;
  EXPECT_THROW(pl.validate(), std::invalid_argument);
  pl = {};
  pl.reference_distance = 0;
  EXPECT_THROW(pl.validate(), std::invalid_argument);
  pl = {};
  pl.reference_loss_db = 20;
  EXPECT_DOUBLE_EQ(pl.loss(1.0), 100.0);
}

TEST(LosChannel, FacingPairMagnitudeAndPhase) {
  double lambda = 0.01;
  for (double d : {1.0, 3.7, 14.0}) {
    PlanarArray a = PlanarArray::facing({0, 0, 0}, 1, 1, lambda / 2, {1, 0, 0});
    PlanarArray b = PlanarArray::facing({d, 0, 0}, 1, 1, lambda / 2, {-1, 0, 0});
    ChannelMatrix h = los_channel(a, b, lambda, {});
    ASSERT_EQ(h.rows(), 1);
    ASSERT_EQ(h.cols(), 1);
    std::complex<double> v = h.entries(0, 0);
    EXPECT_NEAR(std::abs(v), pi / (d * d), 1e-12 * pi / (d * d));
    double want = std::remainder(-2 * pi / lambda * d, 2 * pi);
    EXPECT_NEAR(std::remainder(std::arg(v) - want, 2 * pi), 0.0, 1e-9);
  }
}

TEST(LosChannel, EndfireEntryIsExactlyZero) {
  PlanarArray a = PlanarArray::facing({0, 0, 0}, 1, 1, 0.005, {1, 0, 0});
  PlanarArray b = PlanarArray::facing({0, 5, 0}, 1, 1, 0.005, {0, -1, 0});
  ChannelMatrix h = los_channel(a, b, 0.01, {});
  EXPECT_EQ(h.entries(0, 0), std::complex<double>(0.0, 0.0));
}

TEST(LosChannel, EvaluationSceneTxRisBroadsidePair) {
  // tx [0,10,0] facing the RIS center, RIS [10,0,0] facing +y.
  PlanarArray tx = PlanarArray::facing({0, 10, 0}, 1, 1, 0.005, Vec3{10, -10, 0});
  PlanarArray ris = PlanarArray::facing({10, 0, 0}, 1, 1, 0.005, {0, 1, 0});
  double d = std::sqrt(200.0);
  PathLossModel pl;
  EXPECT_NEAR(pl.loss(d), 4.0e4, 1e-6);
  ChannelMatrix h = los_channel(tx, ris, wavelength(28e9), pl);
  double cos_tx = 1.0;
  double cos_ris = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(h.entries(0, 0)), pi * std::sqrt(cos_tx * cos_ris) / 200.0, 1e-15);
}

// Structure: rows index receive elements, entries follow the closed form per pair.
TEST(LosChannel, MatchesElementwiseFormula) {
  double lambda = wavelength(28e9);
  PlanarArray tx = PlanarArray::facing({0, 2, 0.3}, 2, 3, lambda / 2, {1, -0.2, 0});
  PlanarArray rx = PlanarArray::facing({3, 0, 0}, 4, 2, lambda / 2, {-0.5, 1, 0.1});
  PathLossModel pl;
  pl.exponent = 2.5;
  ChannelMatrix h = los_channel(tx, rx, lambda, pl);
  ASSERT_EQ(h.rows(), 8);
  ASSERT_EQ(h.cols(), 6);
  EXPECT_DOUBLE_EQ(h.wavelength, lambda);
  double beta = std::pow((tx.center - rx.center).norm(), 2.5);
  for (std::size_t m = 0; m < rx.size(); ++m) {
    for (std::size_t n = 0; n < tx.size(); ++n) {
      Vec3 pt = element_position(tx, n);
      Vec3 pr = element_position(rx, m);
      double d = (pr - pt).norm();
      double ct = std::clamp(tx.normal.dot((pr - pt) / d), 0.0, 1.0);
      double cr = std::clamp(rx.normal.dot((pt - pr) / d), 0.0, 1.0);
      std::complex<double> want = std::sqrt(pi * pi * ct * cr / beta) * std::polar(1.0, -2 * pi / lambda * d);
      EXPECT_NEAR(std::abs(h.entries(m, n) - want), 0.0, 1e-12 * std::abs(want) + 1e-300);
    }
  }
}

TEST(LosChannel, RejectsOverlap) {
  PlanarArray a = PlanarArray::facing({0, 0, 0}, 2, 2, 0.1, {1, 0, 0});
  EXPECT_THROW(los_channel(a, a, 0.01, {}), DegenerateGeometry);
  EXPECT_THROW(los_channel(a, translated(a, {1, 0, 0}), -1.0, {}), std::invalid_argument);
}

TEST(ChannelDump, BinaryRoundTripIsExact) {
  PlanarArray a = PlanarArray::facing({0, 0, 0}, 3, 2, 0.005, {1, 0, 0});
  PlanarArray b = PlanarArray::facing({2, 0.5, 0}, 2, 2, 0.005, {-1, 0, 0});
  ChannelMatrix h = los_channel(a, b, 0.01, {});
  std::stringstream ss;
  write_channel_binary(h, ss);
  EXPECT_EQ(ss.str().size(), 4u + 4 + 8 + 8 + 8 + 16u * 4 * 6);
  ChannelMatrix r = read_channel_binary(ss);
  EXPECT_EQ(r.entries, h.entries);
  EXPECT_EQ(r.wavelength, h.wavelength);

  std::string bytes = ss.str();
  std::stringstream truncated(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(read_channel_binary(truncated), std::runtime_error);
  std::stringstream bad("XXXX0000");
  EXPECT_THROW(read_channel_binary(bad), std::runtime_error);
}

TEST(ChannelDump, JsonRoundTripIsExact) {
  PlanarArray a = PlanarArray::facing({0, 0, 0}, 2, 2, 0.005, {1, 0, 0});
  PlanarArray b = PlanarArray::facing({2, 0.5, 0}, 1, 3, 0.005, {-1, 0, 0});
  ChannelMatrix h = los_channel(a, b, 0.01, {});
  ChannelMatrix r = channel_from_json(nlohmann::json::parse(channel_to_json(h).dump()));
  EXPECT_EQ(r.entries, h.entries);
  nlohmann::json j = channel_to_json(h);
  j["data"].erase(j["data"].begin());
  EXPECT_THROW(channel_from_json(j), std::runtime_error);
}

}  // namespace
}  // namespace rislink
