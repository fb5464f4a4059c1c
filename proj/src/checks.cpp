#include "wulffkit/checks.hpp"

#include <charconv>
#include <chrono>
#include <cmath>

#include "wulffkit/analysis.hpp"
#include "wulffkit/nnls.hpp"
#include "wulffkit/spherical.hpp"
#include "wulffkit/wulff_ops.hpp"

namespace wulffkit {

namespace {

std::string fmt(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, p);
}

void ev(CheckResult& c, const std::string& key, double value) {
  c.evidence.emplace_back(key, fmt(value));
}
void ev(CheckResult& c, const std::string& key, const std::string& value) {
  c.evidence.emplace_back(key, value);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

struct PresetCase {
  GammaField gamma;
  int level;
};

std::vector<PresetCase> battery_presets(const VerifyOptions& opt) {
  std::vector<PresetCase> out;
  out.push_back({GammaField::constant(1, 1.0), opt.s1_level});
  out.push_back({GammaField::ellipse(1, {2.0, 1.0}), opt.s1_level});
  out.push_back({GammaField::lens(), opt.s1_level});
  out.push_back({GammaField::constant(2, 1.0), opt.s2_level});
  out.push_back({GammaField::ellipse(2, {2.0, 1.0, 1.0}), opt.s2_level});
  out.push_back({GammaField::cube_support(2, {1.0, 1.0, 1.0}), opt.s2_level});
  return out;
}

// deterministic random polytopes with clean facet geometry for the detectors
Polytope random_polytope(int dim, SplitMix64& rng, const Tolerance& tol) {
  for (;;) {
    std::vector<Vec> pts;
    int k = dim == 2 ? 5 + static_cast<int>(rng.index(4))
                     : 6 + static_cast<int>(rng.index(4));
    for (int i = 0; i < k; ++i)
      pts.push_back(rng.unit(dim) * rng.uniform(0.9, 1.25));
    Polytope P;
    try {
      P = convex_hull(pts, dim, tol);
    } catch (const DegenerateInputError&) {
      continue;
    }
    if (interior_depth(P, Vec::zero(dim)) < 0.25) continue;
    double min_facet = 1e300;
    for (size_t f = 0; f < P.facets.size(); ++f)
      min_facet = std::min(min_facet, facet_diameter(P, static_cast<int>(f)));
    if (min_facet < (dim == 2 ? 0.35 : 0.9)) continue;
    P.origin_interior = true;
    return P;
  }
}

// Detector levels. The coarsest S^2 level stays at 2 or above so the axis
// directions are mesh vertices and the cube assertions stay exact; quick mode
// drops to a single level pair.
std::vector<int> levels_for(int n, const VerifyOptions& opt) {
  if (n == 1) {
    int top = std::max(opt.s1_level, 64);
    if (opt.quick) return {top / 2, top};
    return {top / 4, top / 2, top};
  }
  int top = std::max(opt.s2_level, 4);
  if (opt.quick) return {top - 1, top};
  return {top - 2, top - 1, top};
}

}  // namespace

CheckResult check_integrand_support_oracle(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "integrand_support_oracle";
  const Tolerance tol;
  const double band = 1e-6 * opt.tol_scale;
  double worst = 0.0;
  std::string worst_case;
  for (const PresetCase& pc : battery_presets(opt)) {
    Polytope W = wulff_shape(pc.gamma, pc.level, tol);
    std::vector<UnitVector> mesh = sphere_mesh(pc.gamma.n(), pc.level);
    IntegrandSamples gw = convex_integrand(W, mesh, tol);
    double dev = 0.0;
    for (size_t i = 0; i < mesh.size(); ++i)
      dev = std::max(dev, std::fabs(gw.values[i] - support(W, mesh[i])));
    if (dev > worst) {
      worst = dev;
      worst_case = pc.gamma.describe();
    }
  }
  c.wall_ms = timer.ms();
  c.pass = worst <= band && c.wall_ms < 10000.0;
  ev(c, "max_abs_dev", worst);
  ev(c, "band", band);
  ev(c, "worst_case", worst_case);
  return c;
}

CheckResult check_integrand_minimality(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "integrand_minimality";
  const Tolerance tol;
  const double band = 1e-6 * opt.tol_scale;
  double worst = 0.0;
  bool lens_gap_ok = false;
  for (const PresetCase& pc : battery_presets(opt)) {
    MinimalityReport rep = minimality_check(pc.gamma, pc.level, tol);
    worst = std::max(worst, rep.max_violation);
    if (pc.gamma.kind() == GammaField::Kind::lens) {
      // strict gap at +-pi/2: gamma = 1 there, integrand = sqrt(3)/2
      double gap = 1e300;
      for (size_t i = 0; i < rep.mesh.size(); ++i)
        if (std::fabs(std::fabs(rep.mesh[i].angle() - kPi / 2.0)) < 1e-12 ||
            std::fabs(rep.mesh[i].angle() - 3.0 * kPi / 2.0) < 1e-12)
          gap = std::min(gap, rep.gamma_values[i] - rep.integrand_values[i]);
      lens_gap_ok = gap >= 0.1 && gap < 1e299;
      ev(c, "lens_gap_at_pi_over_2", gap);
    }
  }
  // randomized positive trig polynomials
  SplitMix64 rng(opt.seed ^ 0x51ed2700ULL);
  int count = opt.quick ? 10 : 50;
  for (int i = 0; i < count; ++i) {
    int n = i % 5 == 4 ? 2 : 1;  // mostly planar, some spatial
    GammaField g = GammaField::random_trig_poly(n, rng.next(), false);
    int level = n == 1 ? opt.s1_level : opt.s2_level - 1;
    MinimalityReport rep = minimality_check(g, level, tol);
    worst = std::max(worst, rep.max_violation);
  }
  c.wall_ms = timer.ms();
  c.pass = worst <= band && lens_gap_ok;
  ev(c, "max_violation", worst);
  ev(c, "band", band);
  ev(c, "random_fields", static_cast<double>(count));
  return c;
}

CheckResult check_inversion_factorization(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "inversion_factorization";
  SplitMix64 rng(opt.seed ^ 0xfac70f12ULL);
  std::vector<PolarPoint> samples;
  for (int i = 0; i < 1000; ++i) {
    int d = i % 2 == 0 ? 2 : 3;
    UnitVector dir;
    dir.v = rng.unit(d);
    samples.emplace_back(dir, rng.uniform(0.1, 10.0));
  }
  FactorizationReport rep = inversion_factorization_check(samples);
  c.wall_ms = timer.ms();
  c.pass = rep.max_discrepancy <= 1e-10;
  ev(c, "samples", static_cast<double>(rep.samples));
  ev(c, "max_discrepancy", rep.max_discrepancy);
  ev(c, "band", 1e-10);
  return c;
}

CheckResult check_psi_properties(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "psi_properties";
  SplitMix64 rng(opt.seed ^ 0x9517abcdULL);
  const Tolerance tol;
  double worst_orth = 0.0, worst_span = 0.0, worst_inv = 0.0;
  double min_pole_dot = 1e300;
  const int count = opt.quick ? 2000 : 10000;
  // the involution conditions badly near the equator and the poles (the
  // normalizing factor degenerates), so its samples keep a small margin
  const double inv_margin = 5e-3;
  for (int i = 0; i < count; ++i) {
    int d = i % 2 == 0 ? 3 : 4;
    Vec p = rng.unit(d);
    double cz = p[d - 1];
    if (std::fabs(cz) >= 1.0 - 1e-6) {
      --i;
      continue;
    }
    SpherePoint P;
    P.v = p;
    SpherePoint psi = psi_pole(P, tol);
    worst_orth = std::max(worst_orth, std::fabs(P.dot(psi)));
    // span residual: remove the components along an orthonormal basis of
    // span{N, P}
    Vec n_axis = Vec::axis(d, d - 1);
    Vec b1 = n_axis;
    Vec b2 = (p - b1 * b1.dot(p)).normalized();
    Vec res = psi.v - b1 * b1.dot(psi.v) - b2 * b2.dot(psi.v);
    worst_span = std::max(worst_span, res.norm());
    min_pole_dot = std::min(min_pole_dot, psi.v[d - 1]);
    if (cz > inv_margin && cz < 1.0 - inv_margin) {
      SpherePoint back = psi_pole(psi, tol);
      worst_inv = std::max(worst_inv, distance(back.v, p));
    }
  }
  c.wall_ms = timer.ms();
  c.pass = worst_orth <= 1e-12 && worst_span <= 1e-12 && min_pole_dot > 0.0 &&
           worst_inv <= 1e-10;
  ev(c, "max_orthogonality_residual", worst_orth);
  ev(c, "max_span_residual", worst_span);
  ev(c, "min_pole_component", min_pole_dot);
  ev(c, "max_involution_residual", worst_inv);
  return c;
}

CheckResult check_spherical_route(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "spherical_route_membership";
  const Tolerance tol;
  const int probes = opt.quick ? 1000 : opt.probes;
  int disagreements = 0, total = 0, skipped = 0;
  SplitMix64 seeder(opt.seed ^ 0x0500f00dULL);
  std::vector<PresetCase> cases = {
      {GammaField::constant(1, 1.0), opt.s1_level},
      {GammaField::lens(), opt.s1_level},
      {GammaField::cube_support(2, {1.0, 1.0, 1.0}), opt.s2_level},
  };
  for (const PresetCase& pc : cases) {
    ProbeReport rep =
        spherical_wulff_route(pc.gamma, pc.level, probes, seeder.next(), tol);
    disagreements += rep.disagreements;
    total += rep.probes;
    skipped += rep.skipped_boundary;
  }
  c.wall_ms = timer.ms();
  c.pass = disagreements == 0;
  ev(c, "probes", static_cast<double>(total));
  ev(c, "skipped_boundary", static_cast<double>(skipped));
  ev(c, "disagreements", static_cast<double>(disagreements));
  ev(c, "band", tol.report_tol * opt.tol_scale);
  return c;
}

namespace {

// random hemispherical cluster: points inside a cap of angular radius < 80deg
std::vector<SpherePoint> random_cap_points(int d, SplitMix64& rng) {
  Vec axis = rng.unit(d);
  double radius = rng.uniform(0.3, 1.3);
  int k = 4 + static_cast<int>(rng.index(9));
  std::vector<SpherePoint> pts;
  for (int i = 0; i < k; ++i) {
    Vec t = rng.unit(d);
    t = t - axis * axis.dot(t);
    if (t.norm() < 1e-9) {
      --i;
      continue;
    }
    t = t.normalized();
    double phi = radius * rng.uniform();
    SpherePoint p;
    p.v = axis * std::cos(phi) + t * std::sin(phi);
    pts.push_back(p);
  }
  return pts;
}

}  // namespace

CheckResult check_cap_equivalence(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "cap_intersection_equivalence";
  const Tolerance tol;
  SplitMix64 rng(opt.seed ^ 0x3ae8a5a1ULL);
  const int instances = opt.quick ? 5 : 20;
  const int probes = opt.quick ? 1000 : opt.probes;
  int disagreements = 0, total = 0;
  for (int i = 0; i < instances; ++i) {
    int d = i % 2 == 0 ? 3 : 4;
    auto pts = random_cap_points(d, rng);
    ProbeReport rep = maehara_check(pts, probes, rng.next(), tol);
    disagreements += rep.disagreements;
    total += rep.probes;
  }
  c.wall_ms = timer.ms();
  c.pass = disagreements == 0;
  ev(c, "instances", static_cast<double>(instances));
  ev(c, "probes", static_cast<double>(total));
  ev(c, "disagreements", static_cast<double>(disagreements));
  return c;
}

CheckResult check_double_polar(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "double_polar_identity";
  const Tolerance tol;
  SplitMix64 rng(opt.seed ^ 0x77aa77aaULL);
  const int instances = opt.quick ? 4 : 20;
  const int probes = opt.quick ? 500 : opt.probes;
  int disagreements = 0, total = 0;
  for (int i = 0; i < instances; ++i) {
    int d = i % 2 == 0 ? 3 : 4;
    auto pts = random_cap_points(d, rng);
    ProbeReport rep = double_polar_check(pts, probes, rng.next(), tol);
    disagreements += rep.disagreements;
    total += rep.probes;
  }
  c.wall_ms = timer.ms();
  c.pass = disagreements == 0;
  ev(c, "instances", static_cast<double>(instances));
  ev(c, "probes", static_cast<double>(total));
  ev(c, "disagreements", static_cast<double>(disagreements));
  return c;
}

CheckResult check_polar_antitone(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "polar_antitonicity";
  const Tolerance tol;
  SplitMix64 rng(opt.seed ^ 0x22bb22bbULL);
  const int instances = opt.quick ? 5 : 20;
  const int probes = opt.quick ? 1000 : opt.probes;
  int violations = 0, total = 0;
  for (int i = 0; i < instances; ++i) {
    int d = i % 2 == 0 ? 3 : 4;
    auto sup = random_cap_points(d, rng);
    while (sup.size() < 4) sup = random_cap_points(d, rng);
    std::vector<SpherePoint> sub(sup.begin(),
                                 sup.begin() + static_cast<long>(sup.size() / 2));
    ProbeReport rep =
        polar_antitone_check(sub, sup, probes, rng.next(), tol);
    violations += rep.disagreements;
    total += rep.probes;
  }
  c.wall_ms = timer.ms();
  c.pass = violations == 0;
  ev(c, "instances", static_cast<double>(instances));
  ev(c, "probes", static_cast<double>(total));
  ev(c, "violations", static_cast<double>(violations));
  return c;
}

CheckResult check_dual_wulff_oracle(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "dual_wulff_oracle";
  const Tolerance tol;
  const double band = 1e-6 * opt.tol_scale;
  double worst_reflected = 0.0, worst_involution = 0.0;
  for (const PresetCase& pc : battery_presets(opt)) {
    Polytope W = wulff_shape(pc.gamma, pc.level, tol);
    Polytope D = dual_wulff(W, tol);
    worst_reflected = std::max(
        worst_reflected, hausdorff_distance(D, reflect(polar_body(W, tol), tol)));
    worst_involution =
        std::max(worst_involution, hausdorff_distance(dual_wulff(D, tol), W));
  }
  // cube -> octahedron with vertices +-e_i
  Polytope cube =
      wulff_shape(GammaField::cube_support(2, {1.0, 1.0, 1.0}), opt.s2_level, tol);
  Polytope octa = dual_wulff(cube, tol);
  double octa_dev = 0.0;
  bool octa_count = octa.vertices.size() == 6;
  for (const Vec& v : octa.vertices) {
    double best = 1e300;
    for (int axis = 0; axis < 3; ++axis)
      for (double s : {1.0, -1.0})
        best = std::min(best, distance(v, Vec::axis(3, axis) * s));
    octa_dev = std::max(octa_dev, best);
  }
  // ball of radius r dualizes to the ball of radius 1/r
  const int fine = 4096;
  Polytope ball = wulff_shape(GammaField::constant(1, 2.0), fine, tol);
  Polytope dual_ball = dual_wulff(ball, tol);
  double ball_dev = 0.0;
  for (const UnitVector& u : sphere_mesh(1, 1024))
    ball_dev = std::max(ball_dev, std::fabs(radial(dual_ball, u) - 0.5));
  c.wall_ms = timer.ms();
  c.pass = worst_reflected <= band && worst_involution <= band &&
           octa_count && octa_dev <= 1e-9 && ball_dev <= band;
  ev(c, "max_reflected_polar_dev", worst_reflected);
  ev(c, "max_involution_dev", worst_involution);
  ev(c, "cube_octahedron_vertex_dev", octa_dev);
  ev(c, "octahedron_vertices", static_cast<double>(octa.vertices.size()));
  ev(c, "ball_radial_dev", ball_dev);
  ev(c, "band", band);
  return c;
}

CheckResult check_dual_boundary_inversion(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "dual_boundary_inversion";
  const Tolerance tol;
  const double band = 1e-6 * opt.tol_scale;
  double worst = 0.0;
  for (const PresetCase& pc : battery_presets(opt)) {
    Polytope W = wulff_shape(pc.gamma, pc.level, tol);
    std::vector<UnitVector> mesh = sphere_mesh(pc.gamma.n(), pc.level);
    DualIntegrandReport rep = dual_integrand_check(W, mesh, tol);
    worst = std::max({worst, rep.max_dev_dual, rep.max_dev_primal});
  }
  c.wall_ms = timer.ms();
  c.pass = worst <= band;
  ev(c, "max_identity_dev", worst);
  ev(c, "band", band);
  return c;
}

CheckResult check_regularity_battery(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "regularity_battery";
  const Tolerance tol;
  const DetectorConfig cfg;
  int cases = 0, consistent = 0;
  std::string first_failure;

  auto run = [&](const GammaField& g) {
    AnalysisReport rep =
        regularity_crosscheck(g, levels_for(g.n(), opt), cfg, tol);
    ++cases;
    if (rep.verdict == "consistent")
      ++consistent;
    else if (first_failure.empty())
      first_failure = rep.field + ": " + rep.verdict;
    return rep;
  };

  run(GammaField::constant(1, 1.0));
  run(GammaField::ellipse(1, {2.0, 1.0}));
  AnalysisReport lens = run(GammaField::lens());
  run(GammaField::constant(2, 1.0));
  run(GammaField::ellipse(2, {2.0, 1.0, 1.0}));
  AnalysisReport cube = run(GammaField::cube_support(2, {1.0, 1.0, 1.0}));

  SplitMix64 rng(opt.seed ^ 0x7e011eadULL);
  const int smooth_count = opt.quick ? 4 : 20;
  for (int i = 0; i < smooth_count; ++i)
    run(GammaField::random_trig_poly(i % 2 == 0 ? 1 : 2, rng.next(), true));
  const int poly_count = opt.quick ? 2 : 5;
  for (int i = 0; i < poly_count; ++i) {
    int dim = i < 3 ? 2 : 3;
    Polytope P = random_polytope(dim, rng, tol);
    run(GammaField::poly_support(dim - 1, P.vertices));
  }

  // lens reproduces the strictly-convex-with-non-smooth-gamma figure
  bool lens_flag = lens.nonsmooth_admissible;

  // cube: six persistent flats of diameter 2*sqrt(2), kinks on the
  // coordinate great circles
  bool cube_flats = !cube.flat_spots.empty();
  double flat_dev = 1e300;
  for (const FlatSpotReport& fr : cube.flat_spots) {
    cube_flats = cube_flats && fr.spots.size() == 6;
    for (const FlatSpot& s : fr.spots) {
      flat_dev = std::min(flat_dev, s.diameter_coarse);
      cube_flats = cube_flats &&
                   std::fabs(s.diameter_coarse - 2.0 * std::sqrt(2.0)) <= 1e-6 &&
                   std::fabs(s.diameter_fine - 2.0 * std::sqrt(2.0)) <= 1e-6;
    }
  }
  // every kink candidate must hug a coordinate great circle (within one mesh
  // cell of the pair's coarse level), and candidates must reach all three
  bool cube_kinks = true;
  int kink_count = 0;
  for (const C1Report& kr : cube.integrand_kinks) {
    double band = std::sin(1.5 * mesh_edge_angle(2, kr.level_coarse));
    bool near_plane[3] = {false, false, false};
    kink_count += static_cast<int>(kr.kinks.size());
    for (const KinkCandidate& k : kr.kinks) {
      double min_comp = 1e300;
      for (int a = 0; a < 3; ++a) {
        double c = std::fabs(k.direction[a]);
        min_comp = std::min(min_comp, c);
        if (c <= band) near_plane[a] = true;
      }
      cube_kinks = cube_kinks && min_comp <= band;
    }
    cube_kinks = cube_kinks && near_plane[0] && near_plane[1] && near_plane[2];
  }
  cube_kinks = cube_kinks && kink_count > 0;

  c.wall_ms = timer.ms();
  c.pass = consistent == cases && lens_flag && cube_flats && cube_kinks;
  ev(c, "cases", static_cast<double>(cases));
  ev(c, "consistent", static_cast<double>(consistent));
  ev(c, "lens_nonsmooth_admissible", lens_flag ? "true" : "false");
  ev(c, "cube_flat_spots_ok", cube_flats ? "true" : "false");
  ev(c, "cube_kinks_on_circles", cube_kinks ? "true" : "false");
  if (!first_failure.empty()) ev(c, "first_failure", first_failure);
  return c;
}

CheckResult check_refinement(const VerifyOptions& opt) {
  (void)opt;  // fixed levels 64/128/256 pin the closed-form bounds
  Timer timer;
  CheckResult c;
  c.name = "refinement_behavior";
  const Tolerance tol;
  GammaField unit = GammaField::constant(1, 1.0);
  double prev_excess = 1e300;
  bool ok = true;
  for (int level : {64, 128, 256}) {
    Polytope W = wulff_shape(unit, level, tol);
    // Hausdorff distance to the unit disk: the polygon contains the disk, so
    // the excess is the largest vertex norm minus one
    double excess = 0.0;
    for (const Vec& v : W.vertices) excess = std::max(excess, v.norm() - 1.0);
    double bound = 1.0 / std::cos(kPi / level) - 1.0 + 1e-9;
    ok = ok && excess <= bound && excess < prev_excess;
    prev_excess = excess;
    ev(c, "wulff_excess_L" + std::to_string(level), excess);

    // inscribed route: the gamma hull's facets shrink like the chord length
    Polytope H = gamma_hull(unit, level, tol);
    auto spots = flat_spots(H, 0.0);
    double max_edge = spots.empty() ? 0.0 : spots.front().second;
    ok = ok && max_edge <= 2.0 * std::sin(kPi / level) + 1e-9;
    ev(c, "hull_max_facet_L" + std::to_string(level), max_edge);
  }
  // monotone nesting under refinement
  Polytope coarse = wulff_shape(unit, 128, tol);
  Polytope fine = wulff_shape(unit, 256, tol);
  for (const Vec& v : fine.vertices)
    ok = ok && contains(coarse, v, tol.hull_tol);
  c.wall_ms = timer.ms();
  c.pass = ok;
  return c;
}

CheckResult check_shared_shape(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "shared_shape_equivalence";
  const Tolerance tol;
  SameWulffReport both_true =
      same_wulff_check(GammaField::constant(1, 1.0),
                       GammaField::constant(1, 1.0), opt.s1_level, tol);
  SameWulffReport both_false =
      same_wulff_check(GammaField::constant(1, 1.0),
                       GammaField::constant(1, 2.0), opt.s1_level, tol);
  bool ok = both_true.hulls_equal && both_true.wulffs_equal &&
            !both_false.hulls_equal && !both_false.wulffs_equal &&
            both_true.consistent() && both_false.consistent();
  ev(c, "identical_fields_equal", both_true.hulls_equal ? "true" : "false");
  ev(c, "different_fields_distinct", !both_false.hulls_equal ? "true" : "false");
  if (!opt.quick) {
    // the lens and its own integrand share hull and shape; a level divisible
    // by 6 puts the kink-cone boundaries on the mesh, making the two
    // constraint families agree exactly
    const int level = 3072;
    GammaField lens = GammaField::lens();
    Polytope W = wulff_shape(lens, level, tol);
    IntegrandSamples gw = convex_integrand(W, sphere_mesh(1, level), tol);
    SameWulffReport pair = same_wulff_check(lens, gw.as_field(tol), level, tol);
    ok = ok && pair.hulls_equal && pair.wulffs_equal && pair.consistent();
    ev(c, "lens_vs_integrand_hull_dist", pair.hull_distance);
    ev(c, "lens_vs_integrand_wulff_dist", pair.wulff_distance);
  }
  c.wall_ms = timer.ms();
  c.pass = ok;
  return c;
}

CheckResult check_smooth_field_suite(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "smooth_field_suite";
  const Tolerance tol;
  const DetectorConfig cfg;
  SplitMix64 rng(opt.seed ^ 0xc0c0c0c0ULL);
  std::vector<GammaField> planar = {
      GammaField::constant(1, 1.0),
      GammaField::ellipse(1, {2.0, 1.0}),
      GammaField::random_trig_poly(1, rng.next(), true),
      GammaField::random_trig_poly(1, rng.next(), true),
  };
  std::vector<GammaField> spatial = {
      GammaField::ellipse(2, {2.0, 1.0, 1.0}),
  };
  bool ok = true;
  int cases = 0;
  for (const SmoothFieldResult& r :
       smooth_field_suite(planar, levels_for(1, opt), cfg, tol)) {
    ok = ok && r.pass;
    ++cases;
  }
  for (const SmoothFieldResult& r :
       smooth_field_suite(spatial, levels_for(2, opt), cfg, tol)) {
    ok = ok && r.pass;
    ++cases;
  }
  c.wall_ms = timer.ms();
  c.pass = ok;
  ev(c, "cases", static_cast<double>(cases));
  return c;
}

CheckResult check_polytope_duality(const VerifyOptions& opt) {
  Timer timer;
  CheckResult c;
  c.name = "polytope_duality_counts";
  const Tolerance tol;
  Polytope cube =
      wulff_shape(GammaField::cube_support(2, {1.0, 1.0, 1.0}), opt.s2_level, tol);
  Polytope octa = dual_wulff(cube, tol);
  bool ok = cube.vertices.size() == 8 && cube.facets.size() == 6 &&
            octa.vertices.size() == 6 && octa.facets.size() == 8;
  ev(c, "cube_vertices", static_cast<double>(cube.vertices.size()));
  ev(c, "cube_facets", static_cast<double>(cube.facets.size()));
  ev(c, "dual_vertices", static_cast<double>(octa.vertices.size()));
  ev(c, "dual_facets", static_cast<double>(octa.facets.size()));

  SplitMix64 rng(opt.seed ^ 0xd0a17a55ULL);
  Polytope P = random_polytope(3, rng, tol);
  Polytope D = dual_wulff(P, tol);
  ok = ok && D.facets.size() == P.vertices.size() &&
       D.vertices.size() == P.facets.size();
  ev(c, "random_vertices", static_cast<double>(P.vertices.size()));
  ev(c, "random_facets", static_cast<double>(P.facets.size()));
  ev(c, "random_dual_vertices", static_cast<double>(D.vertices.size()));
  ev(c, "random_dual_facets", static_cast<double>(D.facets.size()));
  c.wall_ms = timer.ms();
  c.pass = ok;
  return c;
}

VerifyReport run_battery(const VerifyOptions& opt) {
  VerifyReport rep;
  rep.options = opt;
  rep.checks.push_back(check_integrand_support_oracle(opt));
  rep.checks.push_back(check_integrand_minimality(opt));
  rep.checks.push_back(check_inversion_factorization(opt));
  rep.checks.push_back(check_psi_properties(opt));
  rep.checks.push_back(check_spherical_route(opt));
  rep.checks.push_back(check_cap_equivalence(opt));
  rep.checks.push_back(check_double_polar(opt));
  rep.checks.push_back(check_polar_antitone(opt));
  rep.checks.push_back(check_dual_wulff_oracle(opt));
  rep.checks.push_back(check_dual_boundary_inversion(opt));
  rep.checks.push_back(check_regularity_battery(opt));
  rep.checks.push_back(check_refinement(opt));
  rep.checks.push_back(check_shared_shape(opt));
  rep.checks.push_back(check_smooth_field_suite(opt));
  rep.checks.push_back(check_polytope_duality(opt));
  return rep;
}

}  // namespace wulffkit
