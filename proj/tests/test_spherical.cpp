#include <doctest.h>

#include <cmath>

#include "wulffkit/spherical.hpp"
#include "wulffkit/wulff_ops.hpp"

using namespace wulffkit;

namespace {

const Tolerance tol{};

SpherePoint sp(double x, double y, double z) {
  SpherePoint p;
  p.v = Vec(x, y, z).normalized();
  return p;
}

const SpherePoint N3 = sp(0.0, 0.0, 1.0);

}  // namespace

TEST_CASE("cap membership") {
  CHECK(cap_contains(N3, N3));
  CHECK_FALSE(cap_contains(N3, sp(0.0, 0.0, -1.0)));
  CHECK(cap_contains(N3, sp(1.0, 0.0, 0.0)));  // boundary counts
}

TEST_CASE("arc points") {
  SpherePoint p = sp(1.0, 0.0, 0.0);
  SpherePoint mid = arc_point(p, p, 0.5);
  CHECK(distance(mid.v, p.v) <= 1e-15);

  SpherePoint q = sp(0.0, 1.0, 0.0);
  SpherePoint m = arc_point(p, q, 0.5);
  CHECK(m[0] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(m[1] == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(distance(arc_point(p, q, 0.0).v, p.v) <= 1e-15);
  CHECK(distance(arc_point(p, q, 1.0).v, q.v) <= 1e-15);

  CHECK_THROWS_AS(arc_point(p, sp(-1.0, 0.0, 0.0), 0.25), DomainError);
}

TEST_CASE("hemisphericity witnesses and certificates") {
  Hemisphericity single = is_hemispherical({N3}, tol);
  REQUIRE(single.witness.has_value());
  CHECK(single.witness->dot(N3) < 0.0);
  CHECK(distance(single.witness->v, Vec(0.0, 0.0, -1.0)) <= 1e-9);

  std::vector<SpherePoint> axes;
  for (int a = 0; a < 3; ++a)
    for (double s : {1.0, -1.0}) {
      SpherePoint p;
      p.v = Vec::axis(3, a) * s;
      axes.push_back(p);
    }
  Hemisphericity sym = is_hemispherical(axes, tol);
  CHECK_FALSE(sym.witness.has_value());
  REQUIRE(sym.certificate.size() == axes.size());
  Vec mix = Vec::zero(3);
  for (size_t i = 0; i < axes.size(); ++i)
    mix = mix + axes[i].v * sym.certificate[i];
  CHECK(mix.norm() <= 1e-6);

  // random cluster inside an 80-degree cap around the pole
  SplitMix64 rng(17);
  std::vector<SpherePoint> cap;
  for (int i = 0; i < 20; ++i) {
    Vec t = rng.unit(3);
    t = (t - Vec(0, 0, 1) * t[2]).normalized();
    double phi = rng.uniform(0.0, 80.0 * kPi / 180.0);
    SpherePoint p;
    p.v = Vec(0, 0, 1) * std::cos(phi) + t * std::sin(phi);
    cap.push_back(p);
  }
  Hemisphericity h = is_hemispherical(cap, tol);
  REQUIRE(h.witness.has_value());
  for (const SpherePoint& p : cap) CHECK(h.witness->dot(p) < 0.0);
}

TEST_CASE("polar membership by generator caps") {
  SphericalConvexBody body = s_conv({N3}, tol);
  CHECK(polar_contains(body, N3, tol));
  CHECK_FALSE(polar_contains(body, sp(0.0, 0.0, -1.0), tol));

  SphericalConvexBody two = s_conv({sp(1, 0, 0), sp(0, 1, 0)}, tol);
  CHECK(polar_contains(two, sp(0, 0, 1), tol));  // orthogonal to both
}

TEST_CASE("polar boundary of a single generator is the equator") {
  SphericalConvexBody body = s_conv({N3}, tol);
  auto ring = polar_boundary(body, 16, tol);
  REQUIRE(ring.size() >= 64);
  for (const SpherePoint& p : ring) CHECK(std::fabs(p[2]) <= 1e-12);
}

TEST_CASE("polar boundary of a cluster checks back into the polar set") {
  SplitMix64 rng(23);
  std::vector<SpherePoint> cluster;
  for (int i = 0; i < 12; ++i) {
    Vec t = rng.unit(3);
    t = (t - Vec(0, 0, 1) * t[2]).normalized();
    double phi = rng.uniform(0.0, 0.5);
    SpherePoint p;
    p.v = Vec(0, 0, 1) * std::cos(phi) + t * std::sin(phi);
    cluster.push_back(p);
  }
  SphericalConvexBody body = s_conv(cluster, tol);
  auto ring = polar_boundary(body, 8, tol);
  REQUIRE(!ring.empty());
  for (const SpherePoint& p : ring)
    for (const Vec& g : body.generators) CHECK(p.dot(g) >= -1e-9);
}

TEST_CASE("polar boundary of a quarter great-circle arc is a lune") {
  // generators sampled along a quarter turn; boundary points are orthogonal
  // to one of the two extreme generators
  std::vector<SpherePoint> arc;
  for (int k = 0; k <= 8; ++k) {
    double a = 0.5 * kPi * k / 8.0;
    arc.push_back(sp(std::cos(a), std::sin(a), 0.0));
  }
  SphericalConvexBody body = s_conv(arc, tol);
  auto ring = polar_boundary(body, 16, tol);
  REQUIRE(!ring.empty());
  for (const SpherePoint& p : ring) {
    double d1 = std::fabs(p.dot(arc.front().v));
    double d2 = std::fabs(p.dot(arc.back().v));
    CHECK(std::min(d1, d2) <= 1e-9);
    for (const Vec& g : body.generators) CHECK(p.dot(g) >= -1e-9);
  }
}

TEST_CASE("maehara membership equivalence on random hemispherical sets") {
  // single generator: both sides reduce to the one cap
  ProbeReport one = maehara_check({N3}, 1000, 11, Tolerance{});
  CHECK(one.disagreements == 0);

  SplitMix64 rng(29);
  for (int inst = 0; inst < 6; ++inst) {
    int d = inst % 2 == 0 ? 3 : 4;
    std::vector<SpherePoint> pts;
    Vec axis = rng.unit(d);
    for (int i = 0; i < 6; ++i) {
      Vec t = rng.unit(d);
      t = (t - axis * axis.dot(t)).normalized();
      double phi = rng.uniform(0.0, 1.2);
      SpherePoint p;
      p.v = axis * std::cos(phi) + t * std::sin(phi);
      pts.push_back(p);
    }
    ProbeReport rep = maehara_check(pts, 2000, rng.next(), tol);
    CHECK(rep.disagreements == 0);
    CHECK(rep.probes > 0);
  }
  // antipodal-containing input violates the precondition
  CHECK_THROWS_AS(maehara_check({N3, sp(0.0, 0.0, -1.0)}, 100, 1, tol),
                  DomainError);
}

TEST_CASE("double polar agreement, including degenerate duplicates") {
  SplitMix64 rng(37);
  for (int inst = 0; inst < 4; ++inst) {
    int d = inst % 2 == 0 ? 3 : 4;
    std::vector<SpherePoint> pts;
    Vec axis = rng.unit(d);
    for (int i = 0; i < 10; ++i) {
      Vec t = rng.unit(d);
      t = (t - axis * axis.dot(t)).normalized();
      SpherePoint p;
      double phi = rng.uniform(0.0, 1.0);
      p.v = axis * std::cos(phi) + t * std::sin(phi);
      pts.push_back(p);
    }
    ProbeReport rep = double_polar_check(pts, 2000, rng.next(), tol);
    CHECK(rep.disagreements == 0);
  }
  ProbeReport dup = double_polar_check({N3, N3}, 500, 5, tol);
  CHECK(dup.disagreements == 0);
}

TEST_CASE("polar antitonicity on nested generator sets") {
  SplitMix64 rng(41);
  std::vector<SpherePoint> big;
  Vec axis = rng.unit(3);
  for (int i = 0; i < 12; ++i) {
    Vec t = rng.unit(3);
    t = (t - axis * axis.dot(t)).normalized();
    SpherePoint p;
    double phi = rng.uniform(0.0, 1.1);
    p.v = axis * std::cos(phi) + t * std::sin(phi);
    big.push_back(p);
  }
  std::vector<SpherePoint> mid(big.begin(), big.begin() + 6);
  std::vector<SpherePoint> small(big.begin(), big.begin() + 3);
  for (auto [sub, sup] : {std::pair{&small, &mid}, std::pair{&mid, &big},
                          std::pair{&small, &big}}) {
    ProbeReport rep = polar_antitone_check(*sub, *sup, 3000, rng.next(), tol);
    CHECK(rep.disagreements == 0);
  }
  // equal sets give equal polars: zero violations in both directions
  ProbeReport eq = polar_antitone_check(big, big, 1000, 3, tol);
  CHECK(eq.disagreements == 0);
  CHECK_THROWS_AS(polar_antitone_check(big, mid, 10, 1, tol), DomainError);
}

TEST_CASE("central projection and unprojection") {
  CHECK(distance(central_project(N3, tol), Vec(0.0, 0.0)) <= 1e-15);
  Vec p = central_project(sp(1.0, 0.0, 1.0), tol);
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == doctest::Approx(0.0));

  SpherePoint up = central_unproject(Vec(0.0, 0.0));
  CHECK(distance(up.v, N3.v) <= 1e-15);
  SpherePoint q = central_unproject(Vec(3.0, 4.0));
  CHECK(q[0] == doctest::Approx(3.0 / std::sqrt(26.0)));
  CHECK(q[1] == doctest::Approx(4.0 / std::sqrt(26.0)));
  CHECK(q[2] == doctest::Approx(1.0 / std::sqrt(26.0)));

  SplitMix64 rng(43);
  for (int i = 0; i < 100; ++i) {
    Vec x(rng.uniform(-5, 5), rng.uniform(-5, 5));
    CHECK(distance(central_project(central_unproject(x), tol), x) <= 1e-12);
  }
  CHECK_THROWS_AS(central_project(sp(1.0, 0.0, 0.0), tol), DomainError);
}

TEST_CASE("psi formulas at marked points") {
  // equator points map to the pole
  SpherePoint e = psi_pole(sp(1.0, 0.0, 0.0), tol);
  CHECK(distance(e.v, N3.v) <= 1e-15);

  SpherePoint p = sp(std::sqrt(3.0) / 2.0, 0.0, 0.5);
  SpherePoint im = psi_pole(p, tol);
  CHECK(im[0] == doctest::Approx(-0.5));
  CHECK(im[1] == doctest::Approx(0.0));
  CHECK(im[2] == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(std::fabs(p.dot(im)) <= 1e-15);

  SpherePoint back = psi_pole(im, tol);
  CHECK(distance(back.v, p.v) <= 1e-12);

  CHECK_THROWS_AS(psi_pole(N3, tol), DomainError);
  CHECK_THROWS_AS(psi_pole(sp(0.0, 0.0, -1.0), tol), DomainError);
}

TEST_CASE("psi properties hold on random sphere points") {
  SplitMix64 rng(47);
  for (int i = 0; i < 2000; ++i) {
    int d = i % 2 == 0 ? 3 : 4;
    Vec raw = rng.unit(d);
    if (std::fabs(raw[d - 1]) >= 1.0 - 1e-6) continue;
    SpherePoint P;
    P.v = raw;
    SpherePoint psi = psi_pole(P, tol);
    CHECK(std::fabs(P.dot(psi)) <= 1e-12);
    Vec b1 = Vec::axis(d, d - 1);
    Vec b2 = (raw - b1 * b1.dot(raw)).normalized();
    Vec res = psi.v - b1 * b1.dot(psi.v) - b2 * b2.dot(psi.v);
    CHECK(res.norm() <= 1e-12);
    CHECK(psi[d - 1] > 0.0);
    // the involution degenerates numerically at the equator and pole, so its
    // samples keep a margin
    if (raw[d - 1] > 5e-3 && raw[d - 1] < 1.0 - 5e-3)
      CHECK(distance(psi_pole(psi, tol).v, raw) <= 1e-10);
  }
}

TEST_CASE("inversion factors through the sphere") {
  FactorizationReport one = inversion_factorization_check(
      {PolarPoint(UnitVector(Vec(1.0, 0.0)), 2.0)}, tol);
  CHECK(one.max_discrepancy <= 1e-12);

  FactorizationReport unit = inversion_factorization_check(
      {PolarPoint(UnitVector(Vec(0.0, 1.0)), 1.0)}, tol);
  CHECK(unit.max_discrepancy <= 1e-12);

  SplitMix64 rng(53);
  std::vector<PolarPoint> samples;
  for (int i = 0; i < 1000; ++i) {
    int d = i % 2 == 0 ? 2 : 3;
    UnitVector dir;
    dir.v = rng.unit(d);
    samples.emplace_back(dir, rng.uniform(0.1, 10.0));
  }
  FactorizationReport rep = inversion_factorization_check(samples, tol);
  CHECK(rep.samples == 1000);
  CHECK(rep.max_discrepancy <= 1e-10);
}

TEST_CASE("two-route membership at marked radii") {
  GammaField unit = GammaField::constant(1, 1.0);
  Polytope W = wulff_shape(unit, 256, tol);
  std::vector<UnitVector> mesh = sphere_mesh(1, 256);
  std::vector<Vec> gens;
  for (const UnitVector& theta : mesh) {
    Vec graph_pt = PolarPoint(theta, unit.eval(theta)).cartesian();
    gens.push_back(psi_pole(central_unproject(graph_pt), tol).v);
  }
  auto spherical_member = [&](const Vec& x) {
    SpherePoint lifted = central_unproject(x);
    for (const Vec& g : gens)
      if (lifted.dot(g) < -tol.abs_tol) return false;
    return true;
  };
  Vec dir(0.6, 0.8);
  for (auto [r, want] : {std::pair{0.5, true}, std::pair{0.99, true},
                         std::pair{1.01, false}, std::pair{2.0, false}}) {
    CHECK(contains(W, dir * r, tol.report_tol) == want);
    CHECK(spherical_member(dir * r) == want);
  }
}

TEST_CASE("two-route membership on lens and cube") {
  ProbeReport lens =
      spherical_wulff_route(GammaField::lens(), 256, 2000, 99, tol);
  CHECK(lens.disagreements == 0);
  CHECK(lens.probes > 1500);
  ProbeReport cube = spherical_wulff_route(
      GammaField::cube_support(2, {1.0, 1.0, 1.0}), 3, 2000, 99, tol);
  CHECK(cube.disagreements == 0);
}

TEST_CASE("dual wulff shapes against the reflected polar oracle") {
  // ball of radius 2 dualizes to radius 1/2
  Polytope ball = wulff_shape(GammaField::constant(1, 2.0), 512, tol);
  Polytope dual_ball = dual_wulff(ball, tol);
  for (const UnitVector& u : sphere_mesh(1, 128))
    CHECK(radial(dual_ball, u) == doctest::Approx(0.5).epsilon(1e-4));

  // cube dualizes to the octahedron with vertices +-e_i
  Polytope cube = wulff_shape(GammaField::cube_support(2, {1, 1, 1}), 3, tol);
  Polytope octa = dual_wulff(cube, tol);
  REQUIRE(octa.vertices.size() == 6);
  for (const Vec& v : octa.vertices) {
    double best = 1e300;
    for (int a = 0; a < 3; ++a)
      for (double s : {1.0, -1.0})
        best = std::min(best, distance(v, Vec::axis(3, a) * s));
    CHECK(best <= 1e-9);
  }
  CHECK(hausdorff_distance(octa, reflect(polar_body(cube, tol), tol)) <= 1e-9);

  // the lens is strictly convex but has two corners, so its dual carries two
  // flat edges (the corners' normal cones) joined by smooth arcs
  Polytope lens = wulff_shape(GammaField::lens(), 512, tol);
  Polytope dual_lens = dual_wulff(lens, tol);
  CHECK(hausdorff_distance(dual_lens, reflect(polar_body(lens, tol), tol)) <=
        tol.report_tol);
  auto dual_flats = flat_spots(dual_lens, 0.5);
  REQUIRE(dual_flats.size() == 2);
  for (const auto& [f, d] : dual_flats)
    CHECK(d == doctest::Approx(4.0 / 3.0).epsilon(2e-2));

  // involution
  CHECK(hausdorff_distance(dual_wulff(dual_lens, tol), lens) <= tol.report_tol);
  CHECK(hausdorff_distance(dual_wulff(octa, tol), cube) <= 1e-9);
}

TEST_CASE("dual wulff equals the spherical membership route") {
  SplitMix64 rng(61);
  std::vector<Vec> pts;
  for (int i = 0; i < 16; ++i)
    pts.push_back(rng.unit(3) * rng.uniform(0.7, 1.2));
  Polytope W = convex_hull(pts, 3, tol);
  Polytope D = dual_wulff(W, tol);
  for (int i = 0; i < 500; ++i) {
    Vec z(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
    double margin = -interior_depth(D, z);
    if (std::fabs(margin) <= 1e-7) continue;
    // spherical route: the lifted probe must land in every vertex cap
    bool in_spherical = true;
    for (const Vec& v : W.vertices)
      if (central_unproject(z).dot(central_unproject(v).v) < -tol.abs_tol)
        in_spherical = false;
    CHECK(in_spherical == (margin < 0.0));
  }
}

TEST_CASE("dual integrand identities on marked directions") {
  Polytope ball = wulff_shape(GammaField::constant(1, 2.0), 512, tol);
  std::vector<UnitVector> mesh1 = sphere_mesh(1, 512);
  DualIntegrandReport ball_rep = dual_integrand_check(ball, mesh1, tol);
  CHECK(ball_rep.max_dev_dual <= 1e-9);
  CHECK(ball_rep.max_dev_primal <= 1e-9);
  IntegrandSamples gd = convex_integrand(dual_wulff(ball, tol), mesh1, tol);
  for (double v : gd.values) CHECK(v == doctest::Approx(0.5).epsilon(1e-4));

  Polytope cube = wulff_shape(GammaField::cube_support(2, {1, 1, 1}), 3, tol);
  std::vector<UnitVector> mesh2 = sphere_mesh(2, 3);
  DualIntegrandReport cube_rep = dual_integrand_check(cube, mesh2, tol);
  CHECK(cube_rep.max_dev_dual <= 1e-9);
  CHECK(cube_rep.max_dev_primal <= 1e-9);
  // spot values: gamma_D(e1) = 1/radial(cube, -e1) = 1 and the corner case
  Polytope octa = dual_wulff(cube, tol);
  IntegrandSamples gD = convex_integrand(octa, mesh2, tol);
  for (size_t i = 0; i < mesh2.size(); ++i) {
    if (distance(mesh2[i].v, Vec(1, 0, 0)) <= 1e-9)
      CHECK(gD.values[i] == doctest::Approx(1.0));
    if (distance(mesh2[i].v, Vec(1, 1, 1).normalized()) <= 1e-6)
      CHECK(gD.values[i] == doctest::Approx(1.0 / std::sqrt(3.0)));
  }
}
