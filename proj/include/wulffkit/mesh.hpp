// Sphere meshing. S^1 is sampled at uniform angles; S^2 by subdividing a
// canonical icosahedron (two vertices pinned to the last axis) so meshes are
// reproducible bit for bit. Vertex order is deterministic and stable under
// refinement: the vertices of level L are a prefix of level L+1.
#pragma once

#include <vector>

#include "wulffkit/geometry.hpp"

namespace wulffkit {

struct IcosphereMesh {
  int level = 0;  // number of subdivision passes (>= 1 for public meshes)
  std::vector<Vec> vertices;             // unit vectors in R^3
  std::vector<std::array<int, 3>> faces; // outward-oriented triangles

  std::vector<std::vector<int>> vertex_neighbors() const;

  /// Pairs (a, b) of neighbors of v lying on a common great circle through v,
  /// one on each side. Produced by the subdivision structure; detected by the
  /// coplanarity of (a, b, v) with the origin.
  std::vector<std::pair<int, int>> collinear_pairs(
      int v, const std::vector<std::vector<int>>& neighbors) const;

  /// Longest edge arc length (radians).
  double max_edge_angle() const;

  /// Index of the triangle whose gnomonic barycentric coordinates for `dir`
  /// are all nonnegative, plus the coordinates themselves.
  int locate_triangle(const Vec& dir, std::array<double, 3>& bary) const;
};

/// Canonical icosahedron (level 0). Exposed for tests.
IcosphereMesh icosahedron();

/// Icosphere after `level` subdivision passes; level >= 1.
IcosphereMesh icosphere(int level);

/// Uniform direction mesh on S^n, n in {1,2}. For n=1: `level` directions at
/// angles 2*pi*k/level. For n=2: icosphere vertex set after `level`
/// subdivisions (42, 162, 642, 2562, ... vertices).
std::vector<UnitVector> sphere_mesh(int n, int level);

/// Angular spacing of the mesh: 2*pi/level on S^1, longest edge arc on S^2.
double mesh_edge_angle(int n, int level);

}  // namespace wulffkit
