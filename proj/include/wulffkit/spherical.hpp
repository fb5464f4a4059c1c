// Spherical convex geometry: hemisphere caps, geodesic arcs, hemisphericity
// witnesses, spherical polar sets as dual cones, the central projection and
// the involution psi_N, plus the dual Wulff shape and its cross-checks.
//
// Polar sets are handled through generator inequalities (a dot-product test
// in any dimension); only on S^2 is the dual cone enumerated exactly as rays.
#pragma once

#include <optional>
#include <vector>

#include "wulffkit/gamma.hpp"
#include "wulffkit/polytope.hpp"

namespace wulffkit {

using SpherePoint = UnitVector;

/// Q in the closed hemisphere centered at P.
bool cap_contains(const SpherePoint& P, const SpherePoint& Q,
                  const Tolerance& tol = Tolerance{});

/// Point of the geodesic arc PQ at parameter t in [0,1]. Throws for
/// antipodal endpoints.
SpherePoint arc_point(const SpherePoint& P, const SpherePoint& Q, double t,
                      const Tolerance& tol = Tolerance{});

struct Hemisphericity {
  std::optional<SpherePoint> witness;  // witness . x < 0 for all inputs
  double margin = 0.0;                 // max_x witness . x when present
  std::vector<double> certificate;     // else: hull combination of the origin
};

/// Searches for a strictly separating hemisphere via the nearest-point solve
/// on the convex hull; returns the infeasibility certificate otherwise.
Hemisphericity is_hemispherical(const std::vector<SpherePoint>& points,
                                const Tolerance& tol = Tolerance{});

/// Finitely generated spherical convex body s-conv(generators).
struct SphericalConvexBody {
  std::vector<Vec> generators;          // unit, deduplicated
  std::optional<Vec> witness;           // hemisphericity witness, if found
};

SphericalConvexBody s_conv(const std::vector<SpherePoint>& points,
                           const Tolerance& tol = Tolerance{});

/// Q in the spherical polar set of the body: Q . g >= -abs_tol for every
/// generator (the polar of a hull is the intersection of generator caps).
bool polar_contains(const SphericalConvexBody& body, const SpherePoint& Q,
                    const Tolerance& tol = Tolerance{});

/// Boundary of the polar set on S^2 as an ordered closed polyline, from the
/// exact facet structure of the dual cone. Throws when the polar set has
/// empty interior.
std::vector<SpherePoint> polar_boundary(const SphericalConvexBody& body,
                                        int samples_per_arc = 16,
                                        const Tolerance& tol = Tolerance{});

/// Extreme rays of {y : y . g >= 0 for all generators}; S^2 bodies only,
/// empty when the generators span less than full rank.
std::vector<Vec> dual_cone_rays(const std::vector<Vec>& generators,
                                const Tolerance& tol = Tolerance{});

struct ProbeReport {
  int probes = 0;
  int skipped_boundary = 0;
  int disagreements = 0;
  double max_disagreement_margin = 0.0;
  uint64_t seed = 0;
};

/// Maehara's lemma: cap-intersection membership against sampled convex
/// combinations of the generators.
ProbeReport maehara_check(const std::vector<SpherePoint>& points,
                          int probe_count, uint64_t seed,
                          const Tolerance& tol = Tolerance{});

/// s-conv(points) vs its double polar on random probes; cone membership by
/// NNLS projection on one side, polar cap tests on the other.
ProbeReport double_polar_check(const std::vector<SpherePoint>& points,
                               int probe_count, uint64_t seed,
                               const Tolerance& tol = Tolerance{});

/// Antitonicity of the polar map on nested generator sets A within B.
ProbeReport polar_antitone_check(const std::vector<SpherePoint>& subset,
                                 const std::vector<SpherePoint>& superset,
                                 int probe_count, uint64_t seed,
                                 const Tolerance& tol = Tolerance{});

/// Gnomonic projection from the open upper hemisphere to the tangent space at
/// the pole; throws near the equator.
Vec central_project(const SpherePoint& P, const Tolerance& tol = Tolerance{});

/// (x, 1) normalized; the inverse of central_project.
SpherePoint central_unproject(const Vec& x);

/// Psi_N(P) = (N - (N.P) P) / sqrt(1 - (N.P)^2); throws near the poles.
SpherePoint psi_pole(const SpherePoint& P, const Tolerance& tol = Tolerance{});

struct FactorizationReport {
  int samples = 0;
  double max_discrepancy = 0.0;
};

/// Compares invert() against the composite route through psi_pole and the
/// central projection, in Cartesian form.
FactorizationReport inversion_factorization_check(
    const std::vector<PolarPoint>& samples, const Tolerance& tol = Tolerance{});

/// Two-route membership for the Wulff shape: polytope containment vs cap
/// tests against generators psi_N(unproject(graph point)).
ProbeReport spherical_wulff_route(const GammaField& gamma, int mesh_level,
                                  int probe_count, uint64_t seed,
                                  const Tolerance& tol = Tolerance{});

/// Dual Wulff shape through the unproject/polar/project route, reduced to its
/// exact Euclidean form {z : z . v >= -1 for every vertex v of W}.
Polytope dual_wulff(const Polytope& W, const Tolerance& tol = Tolerance{});

struct DualIntegrandReport {
  double max_dev_dual = 0.0;   // gamma_{D(W)}(u) vs 1/radial(W, -u)
  double max_dev_primal = 0.0; // gamma_W(u) vs 1/radial(D(W), -u)
};

/// Both boundary-inversion identities for the dual pair (W, D(W)).
DualIntegrandReport dual_integrand_check(const Polytope& W,
                                         const std::vector<UnitVector>& mesh,
                                         const Tolerance& tol = Tolerance{});

}  // namespace wulffkit
