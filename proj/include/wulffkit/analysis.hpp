// Regularity detectors and their cross-check: kink evidence for sampled
// integrands, flat-spot evidence for bodies, the strict-convexity vs C^1
// consistency verdict, follow-on assertions for smooth fields, and the pedal
// map.
//
// Both detectors are refinement-persistence heuristics, not decision
// procedures. A kink is a gap in one-sided difference quotients that survives
// refinement; a flat spot is a near-coplanar facet family whose diameter
// survives refinement. Curved regions and smooth fields decay by half per
// level, so the persistence thresholds sit between 0.5 and 1.
#pragma once

#include "wulffkit/gamma.hpp"
#include "wulffkit/polytope.hpp"

namespace wulffkit {

struct DetectorConfig {
  double kink_gap_floor = 1e-6;       // gaps below this are noise
  double kink_rel_floor = 0.05;       // of the field's largest gap; jumps
                                      // below this are under the resolution
                                      // of the mesh
  double kink_persistence = 0.6;      // fine/coarse gap ratio along one
                                      // direction (smooth fields decay at 0.5)
  double flat_persistence = 0.9;      // fine/coarse cluster diameter ratio
  double flat_threshold_edges = 3.0;  // candidate diameter, in mesh edge units
  double cluster_window_edges = 1.2;  // facet-normal window, in edge angles
};

struct KinkCandidate {
  UnitVector direction;
  double gap_coarse = 0.0;  // window-max one-sided derivative gap
  double gap_fine = 0.0;
};

struct C1Report {
  int level_coarse = 0;
  int level_fine = 0;
  double max_gap_coarse = 0.0;
  double max_gap_fine = 0.0;
  std::vector<KinkCandidate> kinks;  // persistent candidates, by gap desc
  bool kinked() const { return !kinks.empty(); }
};

/// One-sided derivative gaps of the same field at two refinement levels.
/// S^1 requires fine.level == 2 * coarse.level; S^2 requires consecutive
/// icosphere levels (gaps are measured along collinear neighbor pairs).
C1Report c1_report(const IntegrandSamples& coarse, const IntegrandSamples& fine,
                   const DetectorConfig& cfg = DetectorConfig{},
                   const Tolerance& tol = Tolerance{});

struct FlatSpot {
  UnitVector normal;
  double diameter_coarse = 0.0;
  double diameter_fine = 0.0;
  int facets_coarse = 0;
  int facets_fine = 0;
};

struct FlatSpotReport {
  int level_coarse = 0;
  int level_fine = 0;
  double max_cluster_coarse = 0.0;
  double max_cluster_fine = 0.0;
  std::vector<FlatSpot> spots;  // persistent candidates, by diameter desc
  bool flat_spotted() const { return !spots.empty(); }
};

/// Persistent flat evidence for the same construction at two levels.
FlatSpotReport strict_convexity_report(const Polytope& coarse, int level_coarse,
                                       const Polytope& fine, int level_fine,
                                       const DetectorConfig& cfg = DetectorConfig{});

enum class TriVerdict { yes, no, mixed };

struct AnalysisReport {
  std::string field;
  int n = 1;
  std::vector<int> levels;
  DetectorConfig config;
  Tolerance tolerances;
  uint64_t seed = 0;

  std::vector<C1Report> integrand_kinks;  // one per consecutive level pair
  std::vector<C1Report> input_kinks;
  std::vector<FlatSpotReport> flat_spots;

  TriVerdict integrand_kinked = TriVerdict::mixed;
  TriVerdict body_flat_spotted = TriVerdict::mixed;
  TriVerdict input_kinked = TriVerdict::mixed;
  bool confident = false;  // >= 2 consecutive level pairs agree
  std::string verdict;     // consistent | inconsistent | inconclusive
  bool nonsmooth_admissible = false;  // kinked input, smooth integrand,
                                      // strictly convex body
};

/// Builds the Wulff shape and its integrand at each level, runs both
/// detectors over consecutive pairs, and compares their verdicts. The input
/// field's own kinks are reported separately; they may coexist with a
/// strictly convex shape.
AnalysisReport regularity_crosscheck(const GammaField& gamma,
                                   const std::vector<int>& levels,
                                   const DetectorConfig& cfg = DetectorConfig{},
                                   const Tolerance& tol = Tolerance{});

struct SmoothFieldResult {
  std::string field;
  bool strictly_convex = false;       // no persistent flat spots
  bool dual_boundary_smooth = false;  // no kinks in the dual's integrand
  double dual_identity_dev = 0.0;     // boundary-inversion identity residual
  bool pass = false;
};

/// Assertions for fields smooth by construction: the shape is strictly
/// convex (hence not a polytope) and the dual boundary is smooth.
std::vector<SmoothFieldResult> smooth_field_suite(
    const std::vector<GammaField>& fields, const std::vector<int>& levels,
    const DetectorConfig& cfg = DetectorConfig{},
    const Tolerance& tol = Tolerance{});

struct PedalPoint {
  UnitVector direction;  // facet normal, the Gauss-map index
  Vec point;             // foot of the perpendicular from p
};

/// Pedal of the boundary relative to p: per facet, the orthogonal projection
/// of p onto the facet hyperplane. Requires p strictly interior.
std::vector<PedalPoint> pedal(const Polytope& W, const Vec& p,
                              const Tolerance& tol = Tolerance{});

}  // namespace wulffkit
