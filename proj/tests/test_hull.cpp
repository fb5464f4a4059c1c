#include <doctest.h>

#include <cmath>

#include "wulffkit/mesh.hpp"
#include "wulffkit/nnls.hpp"
#include "wulffkit/polytope.hpp"

using namespace wulffkit;

namespace {

const Tolerance tol{};

Polytope unit_cube() {
  std::vector<Vec> pts;
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0})
      for (double z : {-1.0, 1.0}) pts.push_back(Vec(x, y, z));
  return convex_hull(pts, 3, tol);
}

std::vector<HalfSpace> axis_halfspaces(int dim, double offset) {
  std::vector<HalfSpace> hs;
  for (int a = 0; a < dim; ++a)
    for (double s : {1.0, -1.0})
      hs.emplace_back(UnitVector(Vec::axis(dim, a) * s), offset);
  return hs;
}

}  // namespace

TEST_CASE("2D hull drops interior points") {
  std::vector<Vec> pts = {Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(0.0, 1.0),
                          Vec(0.2, 0.2)};
  Polytope W = convex_hull(pts, 2, tol);
  CHECK(W.vertices.size() == 3);
  CHECK(contains(W, Vec(0.2, 0.2), 1e-12));
}

TEST_CASE("3D hull of the cube corners is canonical") {
  Polytope W = unit_cube();
  CHECK(W.vertices.size() == 8);
  CHECK(W.facets.size() == 6);  // coplanar triangles merged into quads
  CHECK(W.edge_count() == 12);
  for (const Facet& f : W.facets) {
    CHECK(f.ring.size() == 4);
    CHECK(f.offset == doctest::Approx(1.0));
  }
  CHECK(W.origin_interior);
}

TEST_CASE("points on a circle are all extreme") {
  SplitMix64 rng(7);
  std::vector<Vec> pts;
  for (int i = 0; i < 100; ++i) {
    double a = rng.uniform(0.0, 2 * kPi);
    pts.push_back(Vec(std::cos(a), std::sin(a)));
  }
  Polytope W = convex_hull(pts, 2, tol);
  CHECK(W.vertices.size() == 100);
  // oracle: no input point lies in the hull of the others
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<Vec> rest;
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) rest.push_back(pts[j]);
    CHECK_FALSE(convex_hull_contains(rest, pts[i], 1e-7));
  }
}

TEST_CASE("hull is idempotent") {
  SplitMix64 rng(11);
  std::vector<Vec> pts;
  for (int i = 0; i < 60; ++i) pts.push_back(rng.unit(3) * rng.uniform(0.2, 1.5));
  Polytope W = convex_hull(pts, 3, tol);
  Polytope W2 = convex_hull(W.vertices, 3, tol);
  CHECK(W2.vertices.size() == W.vertices.size());
  CHECK(hausdorff_distance(W, W2) <= 1e-12);
}

TEST_CASE("degenerate input names the deficient rank") {
  std::vector<Vec> line = {Vec(0.0, 0.0), Vec(1.0, 1.0), Vec(2.0, 2.0),
                           Vec(3.0, 3.0)};
  try {
    convex_hull(line, 2, tol);
    FAIL("expected degeneracy");
  } catch (const DegenerateInputError& e) {
    CHECK(e.rank == 1);
  }
  std::vector<Vec> plane = {Vec(0.0, 0.0, 0.0), Vec(1.0, 0.0, 0.0),
                            Vec(0.0, 1.0, 0.0), Vec(1.0, 1.0, 0.0),
                            Vec(0.3, 0.4, 0.0)};
  try {
    convex_hull(plane, 3, tol);
    FAIL("expected degeneracy");
  } catch (const DegenerateInputError& e) {
    CHECK(e.rank == 2);
  }
}

TEST_CASE("halfspace intersection: axis square and cube") {
  Polytope square = halfspace_intersection(axis_halfspaces(2, 1.0), 2, tol);
  CHECK(square.vertices.size() == 4);
  for (const Vec& v : square.vertices) {
    CHECK(std::fabs(std::fabs(v[0]) - 1.0) <= 1e-12);
    CHECK(std::fabs(std::fabs(v[1]) - 1.0) <= 1e-12);
  }
  Polytope cube = halfspace_intersection(axis_halfspaces(3, 1.0), 3, tol);
  CHECK(cube.vertices.size() == 8);
  CHECK(cube.facets.size() == 6);
  CHECK(cube.origin_interior);
}

TEST_CASE("regular 64-gon from uniform normals") {
  std::vector<HalfSpace> hs;
  for (const UnitVector& u : sphere_mesh(1, 64)) hs.emplace_back(u, 1.0);
  Polytope W = halfspace_intersection(hs, 2, tol);
  REQUIRE(W.vertices.size() == 64);
  const double R = 1.0 / std::cos(kPi / 64);
  for (const Vec& v : W.vertices) CHECK(v.norm() == doctest::Approx(R).epsilon(1e-12));
  // brute-force feasibility of every vertex against every inequality
  for (const Vec& v : W.vertices)
    for (const HalfSpace& h : hs) CHECK(h.normal.dot(v) <= h.offset + 1e-9);
}

TEST_CASE("every nonredundant half-space is active at a vertex") {
  std::vector<HalfSpace> hs = axis_halfspaces(2, 1.0);
  hs.emplace_back(UnitVector(Vec(1.0, 1.0)), 5.0);  // redundant
  Polytope W = halfspace_intersection(hs, 2, tol);
  for (size_t i = 0; i + 1 < hs.size(); ++i) {
    double best = -1e300;
    for (const Vec& v : W.vertices) best = std::max(best, hs[i].normal.dot(v));
    CHECK(best == doctest::Approx(hs[i].offset));
  }
  CHECK(W.vertices.size() == 4);  // the redundant constraint changed nothing
}

TEST_CASE("unbounded intersections raise a witness") {
  std::vector<HalfSpace> open;
  open.emplace_back(UnitVector(Vec(1.0, 0.0)), 1.0);
  open.emplace_back(UnitVector(Vec(0.0, 1.0)), 1.0);
  open.emplace_back(UnitVector(Vec(1.0, 1.0)), 1.0);
  try {
    halfspace_intersection(open, 2, tol);
    FAIL("expected unboundedness");
  } catch (const UnboundedError& e) {
    for (const HalfSpace& h : open) CHECK(h.normal.dot(e.witness) < 1e-9);
  }
  std::vector<HalfSpace> slab;
  slab.emplace_back(UnitVector(Vec(1.0, 0.0)), 1.0);
  slab.emplace_back(UnitVector(Vec(-1.0, 0.0)), 1.0);
  slab.emplace_back(UnitVector(Vec(0.70710678, 0.70710678)), 1.0);
  slab.emplace_back(UnitVector(Vec(-0.70710678, 0.70710678)), 1.0);
  CHECK_THROWS_AS(halfspace_intersection(slab, 2, tol), UnboundedError);
}

TEST_CASE("near-parallel half-spaces keep the smaller offset") {
  std::vector<HalfSpace> hs = axis_halfspaces(2, 1.0);
  Vec tweak(1.0, 1e-12);
  hs.emplace_back(UnitVector(tweak), 0.5);  // nearly duplicates +e1
  Polytope W = halfspace_intersection(hs, 2, tol);
  CHECK(support(W, UnitVector(Vec(1.0, 0.0))) == doctest::Approx(0.5));
}

TEST_CASE("support function on the cube") {
  Polytope cube = unit_cube();
  CHECK(support(cube, UnitVector(Vec(1.0, 0.0, 0.0))) == doctest::Approx(1.0));
  CHECK(support(cube, UnitVector(Vec(1.0, 1.0, 1.0))) ==
        doctest::Approx(std::sqrt(3.0)));
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    UnitVector u;
    u.v = rng.unit(3);
    CHECK(support(cube, u) + support(cube, -u) >= 0.0);
  }
}

TEST_CASE("radial function on the cube and a disk approximation") {
  Polytope cube = unit_cube();
  CHECK(radial(cube, UnitVector(Vec(1.0, 1.0, 1.0))) ==
        doctest::Approx(std::sqrt(3.0)));
  CHECK(radial(cube, UnitVector(Vec(1.0, 0.0, 0.0))) == doctest::Approx(1.0));

  std::vector<HalfSpace> hs;
  for (const UnitVector& u : sphere_mesh(1, 64)) hs.emplace_back(u, 1.0);
  Polytope disk = halfspace_intersection(hs, 2, tol);
  for (const UnitVector& u : sphere_mesh(1, 64))
    CHECK(radial(disk, u) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("contains honors the tolerance band") {
  Polytope cube = unit_cube();
  CHECK(contains(cube, Vec(0.0, 0.0, 0.0), 0.0));
  CHECK_FALSE(contains(cube, Vec(1.1, 0.0, 0.0), 1e-9));
  CHECK(contains(cube, Vec(1.0 + 5e-10, 0.0, 0.0), 1e-9));
}

TEST_CASE("contains agrees with the hull-membership oracle") {
  SplitMix64 rng(19);
  std::vector<Vec> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(rng.unit(3) * rng.uniform(0.5, 1.4));
  Polytope W = convex_hull(pts, 3, tol);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    Vec x = Vec(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
                rng.uniform(-1.5, 1.5));
    double depth = interior_depth(W, x);
    if (std::fabs(depth) <= 1e-7) continue;  // boundary band
    CHECK(contains(W, x, 1e-9) == convex_hull_contains(W.vertices, x, 1e-9));
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("polar body: cube to octahedron, square to diamond, and scaling") {
  Polytope cube = unit_cube();
  Polytope octa = polar_body(cube, tol);
  REQUIRE(octa.vertices.size() == 6);
  CHECK(octa.facets.size() == 8);
  for (const Vec& v : octa.vertices) {
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
    // brute-force: |y1| + |y2| + |y3| <= 1 with equality at vertices
    CHECK(std::fabs(v[0]) + std::fabs(v[1]) + std::fabs(v[2]) ==
          doctest::Approx(1.0));
  }
  for (const Vec& y : octa.vertices)
    for (const Vec& x : cube.vertices) CHECK(y.dot(x) <= 1.0 + 1e-12);

  Polytope square = halfspace_intersection(axis_halfspaces(2, 1.0), 2, tol);
  Polytope diamond = polar_body(square, tol);
  REQUIRE(diamond.vertices.size() == 4);
  for (const Vec& v : diamond.vertices)
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));

  std::vector<HalfSpace> hs;
  for (const UnitVector& u : sphere_mesh(1, 128)) hs.emplace_back(u, 2.0);
  Polytope ball2 = halfspace_intersection(hs, 2, tol);
  Polytope half = polar_body(ball2, tol);
  for (const UnitVector& u : sphere_mesh(1, 64)) {
    double r = radial(half, u);
    CHECK(r >= 0.5 * std::cos(kPi / 128) - 1e-9);
    CHECK(r <= 0.5 / std::cos(kPi / 128) + 1e-9);
  }
}

TEST_CASE("polar duality round trip and support-radial pairing") {
  SplitMix64 rng(23);
  std::vector<Vec> pts;
  for (int i = 0; i < 30; ++i) pts.push_back(rng.unit(3) * rng.uniform(0.6, 1.3));
  Polytope W = convex_hull(pts, 3, tol);
  REQUIRE(W.origin_interior);
  Polytope WP = polar_body(W, tol);
  CHECK(hausdorff_distance(polar_body(WP, tol), W) <= tol.report_tol);
  for (const UnitVector& u : sphere_mesh(2, 2))
    CHECK(support(W, u) * radial(WP, u) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("flat spots report facet diameters") {
  Polytope cube = unit_cube();
  auto spots = flat_spots(cube, 1.0);
  REQUIRE(spots.size() == 6);
  for (const auto& [f, d] : spots)
    CHECK(d == doctest::Approx(2.0 * std::sqrt(2.0)));
  CHECK(flat_spots(cube, 0.0).size() == cube.facets.size());

  std::vector<Vec> circle;
  for (const UnitVector& u : sphere_mesh(1, 256)) circle.push_back(u.v);
  Polytope disk = convex_hull(circle, 2, tol);
  CHECK(flat_spots(disk, 0.1).empty());
}

TEST_CASE("hausdorff distance on squares and identical bodies") {
  Polytope sq = halfspace_intersection(axis_halfspaces(2, 0.5), 2, tol);
  CHECK(hausdorff_distance(sq, sq) == 0.0);

  Polytope big = halfspace_intersection(axis_halfspaces(2, 0.75), 2, tol);
  // corner excess of the 1.5x square over the unit square
  CHECK(hausdorff_distance(sq, big) ==
        doctest::Approx(0.25 * std::sqrt(2.0)).epsilon(1e-12));

  std::vector<Vec> tri = {Vec(0.0, 0.0), Vec(1.0, 0.0), Vec(0.0, 1.0)};
  Polytope t1 = convex_hull(tri, 2, tol);
  tri.push_back(Vec(0.25, 0.25));
  Polytope t2 = convex_hull(tri, 2, tol);
  CHECK(hausdorff_distance(t1, t2) <= 1e-12);
}

TEST_CASE("nnls certificates are sound") {
  // separation: points clustered near +e3
  std::vector<Vec> cl = {Vec(0.1, 0.0, 1.0), Vec(-0.1, 0.2, 0.9),
                         Vec(0.0, -0.1, 1.1)};
  auto sep = separate_origin(cl, 1e-9);
  REQUIRE(sep.has_value());
  for (const Vec& p : cl) CHECK(sep->direction.dot(p) < 0.0);

  // infeasibility: symmetric antipodes surround the origin
  std::vector<Vec> sym;
  for (int a = 0; a < 3; ++a)
    for (double s : {1.0, -1.0}) sym.push_back(Vec::axis(3, a) * s);
  CHECK_FALSE(separate_origin(sym, 1e-9).has_value());
  auto w = origin_combination(sym, 1e-6);
  Vec mix = Vec::zero(3);
  double total = 0.0;
  for (size_t i = 0; i < sym.size(); ++i) {
    mix = mix + sym[i] * w[i];
    total += w[i];
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK(mix.norm() <= 1e-6);
}
