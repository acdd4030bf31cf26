// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#include "rislink/geometry.hpp"

#include <algorithm>
#include <sstream>

namespace rislink {

namespace {

constexpr double kFrameTolerance = 1e-9;

void check_index(const PlanarArray& array, std::size_t k) {
  if (k >= array.size()) {
    throw std::out_of_range("element index " + std::to_string(k) + " out of range for array of " +
                            std::to_string(array.size()) + " elements");
  }
}

}  // namespace

Vec3 Vec3::normalized() const {
  const double n = norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateGeometry("cannot normalize vector " + to_string(*this));
  }
  return *this / n;
}

std::string to_string(const Vec3& v) {
  std::ostringstream os;
  os << '[' << v.x << ", " << v.y << ", " << v.z << ']';
  return os.str();
}

void PlanarArray::validate() const {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("planar array needs at least one row and one column");
  }
  if (!(spacing > 0.0) || !std::isfinite(spacing)) {
    throw std::invalid_argument("planar array spacing must be positive");
  }
  if (!center.finite()) {
    throw std::invalid_argument("planar array center must be finite");
  }
  for (const Vec3* axis : {&axis_row, &axis_col, &normal}) {
    if (!axis->finite() || std::abs(axis->norm() - 1.0) > kFrameTolerance) {
      throw std::invalid_argument("planar array axes must be unit norm, got " + to_string(*axis));
    }
  }
  if (std::abs(axis_row.dot(axis_col)) > kFrameTolerance || std::abs(axis_row.dot(normal)) > kFrameTolerance ||
      std::abs(axis_col.dot(normal)) > kFrameTolerance) {
    throw std::invalid_argument("planar array axes must be pairwise orthogonal");
  }
}

PlanarArray PlanarArray::facing(const Vec3& center, int rows, int cols, double spacing, const Vec3& normal) {
  PlanarArray array;
  array.center = center;
  array.rows = rows;
  array.cols = cols;
  array.spacing = spacing;
  array.normal = normal.normalized();
  Vec3 up{0.0, 0.0, 1.0};
  if (std::abs(up.dot(array.normal)) > 1.0 - 1e-6) {
    up = {1.0, 0.0, 0.0};
  }
  array.axis_row = (up - array.normal * up.dot(array.normal)).normalized();
  array.axis_col = array.axis_row.cross(array.normal).normalized();
  array.validate();
  return array;
}

Vec3 element_offset(const PlanarArray& array, std::size_t k) {
  check_index(array, k);
  const auto cols = static_cast<std::size_t>(array.cols);
  const double r = static_cast<double>(k / cols) - 0.5 * (array.rows - 1);
  const double c = static_cast<double>(k % cols) - 0.5 * (array.cols - 1);
  return array.axis_row * (r * array.spacing) + array.axis_col * (c * array.spacing);
}

Vec3 element_position(const PlanarArray& array, std::size_t k) { return array.center + element_offset(array, k); }

std::vector<Vec3> element_positions(const PlanarArray& array) {
  array.validate();
  std::vector<Vec3> out;
  out.reserve(array.size());
  for (std::size_t k = 0; k < array.size(); ++k) {
    out.push_back(element_position(array, k));
  }
  return out;
}

double pairwise_distance(const PlanarArray& a, std::size_t m, const PlanarArray& b, std::size_t n) {
  const double d = (element_position(a, m) - element_position(b, n)).norm();
  if (!(d > 0.0)) {
    throw DegenerateGeometry("coincident array elements at " + to_string(element_position(a, m)));
  }
  return d;
}

double aperture_cosine(const Vec3& from, const Vec3& normal, const Vec3& to) {
  const Vec3 delta = to - from;
  const double d = delta.norm();
  if (!(d > 0.0)) {
    throw DegenerateGeometry("aperture cosine undefined for coincident points at " + to_string(from));
  }
  return std::clamp(normal.dot(delta) / d, 0.0, 1.0);
}

double aperture_cosine(const PlanarArray& a, std::size_t m, const PlanarArray& b, std::size_t n) {
  return aperture_cosine(element_position(a, m), a.normal, element_position(b, n));
}

PlanarArray translated(const PlanarArray& array, const Vec3& offset) {
  PlanarArray out = array;
  out.center += offset;
  return out;
}

}  // namespace rislink
