// The Euclidean pipeline: Wulff shapes as half-space intersections, hulls of
// inverted gamma graphs, convex integrands through the inversion route, and
// the minimality / shared-shape checks.
#pragma once

#include "wulffkit/gamma.hpp"
#include "wulffkit/polytope.hpp"

namespace wulffkit {

/// W_gamma = intersection over the mesh of {x . theta <= gamma(theta)}.
/// Origin interior by construction. Nested meshes give nested shapes.
Polytope wulff_shape(const GammaField& gamma, int mesh_level,
                     const Tolerance& tol = Tolerance{});

/// Convex hull of the inverted graph {(-theta, 1/gamma(theta))} over the
/// mesh. Its boundary carries the convex-integrand structure.
Polytope gamma_hull(const GammaField& gamma, int mesh_level,
                    const Tolerance& tol = Tolerance{});

/// Convex integrand gamma_W sampled at `mesh`: invert the graph of a field
/// whose Wulff shape is W (the support field), hull it, and read radii of the
/// hull boundary. Equals support(W, .) up to tolerance; the vertex-max
/// support function is the independent oracle, not the implementation.
IntegrandSamples convex_integrand(const Polytope& W,
                                  const std::vector<UnitVector>& mesh,
                                  const Tolerance& tol = Tolerance{});

struct ConvexIntegrandCheck {
  bool is_convex_integrand = false;
  double worst_depth = 0.0;       // interior depth of the worst graph point
  UnitVector worst_direction;     // where it happens
};

/// Definition test: every inverted graph point lies on the boundary of the
/// gamma hull (within tol_depth).
ConvexIntegrandCheck is_convex_integrand(const GammaField& gamma,
                                         int mesh_level, double tol_depth,
                                         const Tolerance& tol = Tolerance{});

struct MinimalityReport {
  double max_violation = 0.0;  // max over mesh of gamma_W - gamma
  std::vector<int> equality_indices;  // |gamma_W - gamma| <= report_tol
  std::vector<UnitVector> mesh;
  std::vector<double> gamma_values;
  std::vector<double> integrand_values;
  bool holds(double band) const { return max_violation <= band; }
};

/// gamma_W <= gamma pointwise over the mesh, with the equality set.
MinimalityReport minimality_check(const GammaField& gamma, int mesh_level,
                                  const Tolerance& tol = Tolerance{});

struct SameWulffReport {
  bool hulls_equal = false;
  bool wulffs_equal = false;
  double hull_distance = 0.0;
  double wulff_distance = 0.0;
  /// Both sides of the equivalence must agree; disagreement means a kernel
  /// defect, not a geometric outcome.
  bool consistent() const { return hulls_equal == wulffs_equal; }
};

SameWulffReport same_wulff_check(const GammaField& g1, const GammaField& g2,
                                 int mesh_level,
                                 const Tolerance& tol = Tolerance{});

}  // namespace wulffkit
