// Convex-polytope engine for dimensions 2 and 3: hulls, half-space
// intersection through polar duality, support/radial queries, polar bodies,
// flat-spot extraction, and the Pompeiu-Hausdorff distance.
//
// Robustness policy: plain floating point with explicit hull_tol snapping and
// deterministic tie-breaking (lexicographic vertex order). Coplanar triangle
// fans are merged into maximal facets so facet counts are canonical.
#pragma once

#include <string>
#include <vector>

#include "wulffkit/geometry.hpp"

namespace wulffkit {

/// Closed half-space {x : normal . x <= offset} with the origin strictly
/// inside (offset > 0).
struct HalfSpace {
  UnitVector normal;
  double offset = 1.0;

  HalfSpace() = default;
  HalfSpace(const UnitVector& n, double off) : normal(n), offset(off) {
    if (!(off > 0.0)) throw DomainError("half-space offset must be positive");
  }
};

/// Half-space intersection with an unbounded result. `witness` is a recession
/// direction: every input normal has nonpositive dot with it.
struct UnboundedError : DomainError {
  Vec witness;
  UnboundedError(const std::string& msg, const Vec& w)
      : DomainError(msg), witness(w) {}
};

struct Facet {
  UnitVector normal;       // outward unit normal
  double offset = 0.0;     // normal . x = offset on the facet plane
  std::vector<int> ring;   // vertex indices; oriented CCW seen from outside
};

struct Polytope {
  int dim = 0;
  std::vector<Vec> vertices;
  std::vector<Facet> facets;
  std::vector<std::vector<int>> facet_adjacency;  // facets sharing an edge
  bool origin_interior = false;

  size_t edge_count() const;
  double circumradius() const;  // max vertex norm
};

/// Convex hull of a point cloud. Vertices are a snapped subset of the input;
/// output is canonically ordered. Throws DegenerateInputError when the points
/// do not span the space.
Polytope convex_hull(const std::vector<Vec>& points, int dim,
                     const Tolerance& tol = Tolerance{});

/// Intersection of half-spaces, realized through the polar-duality route:
/// hull the dual points normal/offset, read that hull's facets as vertices.
/// Throws UnboundedError when the normals fail to positively span.
Polytope halfspace_intersection(const std::vector<HalfSpace>& hs, int dim,
                                const Tolerance& tol = Tolerance{});

/// Support function h_W(u) = max over vertices of v . u.
double support(const Polytope& W, const UnitVector& u);

/// Radial function: the unique r > 0 with r*u on the boundary. Requires the
/// origin interior.
double radial(const Polytope& W, const UnitVector& u);

/// Membership test against all facet inequalities, slack `tol`.
bool contains(const Polytope& W, const Vec& x, double tol);

/// Smallest facet slack min_f (offset_f - normal_f . x); positive inside.
double interior_depth(const Polytope& W, const Vec& x);

/// Polar body W* = {y : y . x <= 1 for all x in W}; origin must be interior.
Polytope polar_body(const Polytope& W, const Tolerance& tol = Tolerance{});

/// Reflection through the origin.
Polytope reflect(const Polytope& W, const Tolerance& tol = Tolerance{});

/// Max pairwise vertex distance of one facet.
double facet_diameter(const Polytope& W, int facet);

/// Facets whose vertex-set diameter exceeds `diameter_threshold`, sorted by
/// descending diameter (ties by facet id).
std::vector<std::pair<int, double>> flat_spots(const Polytope& W,
                                               double diameter_threshold);

/// Euclidean distance from x to the solid polytope (0 when inside).
double distance_to_polytope(const Polytope& W, const Vec& x);

/// Pompeiu-Hausdorff distance. Exact for polytope pairs: the one-sided excess
/// of a convex body over another is attained at a vertex, so vertex-to-body
/// distances decide it; a support-function sweep over a fixed direction mesh
/// is folded in as a cross-check lower bound.
double hausdorff_distance(const Polytope& A, const Polytope& B);

}  // namespace wulffkit
