#include "wulffkit/wulff_ops.hpp"

#include <cmath>

namespace wulffkit {

Polytope wulff_shape(const GammaField& gamma, int mesh_level,
                     const Tolerance& tol) {
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), mesh_level);
  std::vector<HalfSpace> hs;
  hs.reserve(mesh.size());
  for (const UnitVector& theta : mesh)
    hs.emplace_back(theta, gamma.eval(theta));
  return halfspace_intersection(hs, gamma.ambient_dim(), tol);
}

Polytope gamma_hull(const GammaField& gamma, int mesh_level,
                    const Tolerance& tol) {
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), mesh_level);
  std::vector<Vec> pts;
  pts.reserve(mesh.size());
  for (const UnitVector& theta : mesh) {
    PolarPoint graph_point(theta, gamma.eval(theta));
    pts.push_back(invert(graph_point).cartesian());
  }
  Polytope H = convex_hull(pts, gamma.ambient_dim(), tol);
  double min_off = 1e300;
  for (const Facet& f : H.facets) min_off = std::min(min_off, f.offset);
  H.origin_interior = min_off > tol.hull_tol;
  return H;
}

IntegrandSamples convex_integrand(const Polytope& W,
                                  const std::vector<UnitVector>& mesh,
                                  const Tolerance& tol) {
  if (!W.origin_interior)
    throw DomainError("convex_integrand requires the origin interior");
  if (mesh.empty() || mesh.front().dim() != W.dim)
    throw DomainError("convex_integrand: mesh dimension mismatch");
  // inverted graph of the support field of W, hulled, then read back by radii
  std::vector<Vec> pts;
  pts.reserve(mesh.size());
  for (const UnitVector& theta : mesh) {
    PolarPoint graph_point(theta, support(W, theta));
    pts.push_back(invert(graph_point).cartesian());
  }
  Polytope H = convex_hull(pts, W.dim, tol);
  double min_off = 1e300;
  for (const Facet& f : H.facets) min_off = std::min(min_off, f.offset);
  H.origin_interior = min_off > tol.hull_tol;
  if (!H.origin_interior)
    throw DomainError("convex_integrand: inverted-graph hull lost the origin");

  IntegrandSamples out;
  out.n = W.dim - 1;
  out.level = 0;
  out.directions = mesh;
  out.values.reserve(mesh.size());
  for (const UnitVector& theta : mesh)
    out.values.push_back(1.0 / radial(H, -theta));
  out.provenance = "convex_integrand";
  return out;
}

ConvexIntegrandCheck is_convex_integrand(const GammaField& gamma,
                                         int mesh_level, double tol_depth,
                                         const Tolerance& tol) {
  Polytope H = gamma_hull(gamma, mesh_level, tol);
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), mesh_level);
  ConvexIntegrandCheck out;
  out.worst_depth = -1e300;
  for (const UnitVector& theta : mesh) {
    Vec p = invert(PolarPoint(theta, gamma.eval(theta))).cartesian();
    double depth = interior_depth(H, p);
    if (depth > out.worst_depth) {
      out.worst_depth = depth;
      out.worst_direction = theta;
    }
  }
  out.is_convex_integrand = out.worst_depth <= tol_depth;
  return out;
}

MinimalityReport minimality_check(const GammaField& gamma, int mesh_level,
                                  const Tolerance& tol) {
  Polytope W = wulff_shape(gamma, mesh_level, tol);
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), mesh_level);
  IntegrandSamples gw = convex_integrand(W, mesh, tol);
  MinimalityReport rep;
  rep.mesh = mesh;
  rep.max_violation = -1e300;
  rep.gamma_values.reserve(mesh.size());
  rep.integrand_values = gw.values;
  for (size_t i = 0; i < mesh.size(); ++i) {
    double g = gamma.eval(mesh[i]);
    rep.gamma_values.push_back(g);
    double diff = gw.values[i] - g;
    rep.max_violation = std::max(rep.max_violation, diff);
    if (std::fabs(diff) <= tol.report_tol)
      rep.equality_indices.push_back(static_cast<int>(i));
  }
  return rep;
}

SameWulffReport same_wulff_check(const GammaField& g1, const GammaField& g2,
                                 int mesh_level, const Tolerance& tol) {
  if (g1.n() != g2.n())
    throw DomainError("same_wulff_check: fields live on different spheres");
  SameWulffReport rep;
  rep.hull_distance =
      hausdorff_distance(gamma_hull(g1, mesh_level, tol),
                         gamma_hull(g2, mesh_level, tol));
  rep.wulff_distance =
      hausdorff_distance(wulff_shape(g1, mesh_level, tol),
                         wulff_shape(g2, mesh_level, tol));
  rep.hulls_equal = rep.hull_distance <= tol.report_tol;
  rep.wulffs_equal = rep.wulff_distance <= tol.report_tol;
  return rep;
}

}  // namespace wulffkit
