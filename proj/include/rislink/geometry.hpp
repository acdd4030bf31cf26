// Copyright 2026 The rislink Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rislink {

/// Point or direction in the scene frame, meters.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 normalized() const;
  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

std::string to_string(const Vec3& v);

/// Raised when two elements coincide or a direction is undefined.
class DegenerateGeometry : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Uniform planar array. Element k = r * cols + c sits at
///   center + (r - (rows-1)/2) * spacing * axis_row + (c - (cols-1)/2) * spacing * axis_col
/// so the grid is centered on `center` and enumerated row-major.
struct PlanarArray {
  Vec3 center;
  int rows = 1;
  int cols = 1;
  double spacing = 0.0;
  Vec3 axis_row{0.0, 0.0, 1.0};
  Vec3 axis_col{0.0, 1.0, 0.0};
  Vec3 normal{1.0, 0.0, 0.0};

  std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }

  /// Throws std::invalid_argument if the frame is not orthonormal (1e-9),
  /// the shape is empty, the spacing is not positive or the center is not finite.
  void validate() const;

  /// Builds an array whose broadside points along `normal`. The row axis is the
  /// component of +z orthogonal to the normal (or +x when the normal is vertical),
  /// so for horizontal normals rows run vertically and columns horizontally.
  static PlanarArray facing(const Vec3& center, int rows, int cols, double spacing, const Vec3& normal);
};

Vec3 element_position(const PlanarArray& array, std::size_t k);
std::vector<Vec3> element_positions(const PlanarArray& array);

/// Offset of element k from the array center.
Vec3 element_offset(const PlanarArray& array, std::size_t k);

double pairwise_distance(const PlanarArray& a, std::size_t m, const PlanarArray& b, std::size_t n);

/// cos of the angle between a's broadside and the direction from element m of a
/// toward element n of b, clamped below at 0.
double aperture_cosine(const PlanarArray& a, std::size_t m, const PlanarArray& b, std::size_t n);

/// Same as aperture_cosine but from raw points; `normal` must be unit norm.
double aperture_cosine(const Vec3& from, const Vec3& normal, const Vec3& to);

/// Rigidly translated copy.
PlanarArray translated(const PlanarArray& array, const Vec3& offset);

}  // namespace rislink
