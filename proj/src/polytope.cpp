#include "wulffkit/polytope.hpp"

#include <algorithm>
#include <cmath>

#include "hull_internal.hpp"
#include "wulffkit/mesh.hpp"
#include "wulffkit/nnls.hpp"

namespace wulffkit {

size_t Polytope::edge_count() const {
  size_t half_edges = 0;
  for (const Facet& f : facets) half_edges += f.ring.size();
  return half_edges / 2;
}

double Polytope::circumradius() const {
  double r = 0.0;
  for (const Vec& v : vertices) r = std::max(r, v.norm());
  return r;
}

Polytope convex_hull(const std::vector<Vec>& points, int dim,
                     const Tolerance& tol) {
  tol.validate();
  if (dim != 2 && dim != 3)
    throw DomainError("convex_hull supports dim in {2,3}");
  for (const Vec& p : points)
    if (p.dim != dim) throw DomainError("convex_hull: mixed dimensions");
  if (points.size() < static_cast<size_t>(dim + 1))
    throw DegenerateInputError("convex_hull: not enough points", 0);
  return dim == 2 ? detail::hull2d(points, tol) : detail::hull3d(points, tol);
}

namespace {

// near-parallel pruning: among half-spaces whose normals differ by less than
// ~1e-10 radians, only the smallest offset can matter
std::vector<HalfSpace> dedupe_halfspaces(const std::vector<HalfSpace>& hs) {
  const double sin_tol = 1e-10;
  std::vector<int> order(hs.size());
  for (size_t i = 0; i < hs.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return hs[static_cast<size_t>(a)].normal.v.lex_less(
        hs[static_cast<size_t>(b)].normal.v);
  });
  std::vector<char> dropped(hs.size(), 0);
  for (size_t i = 0; i < order.size(); ++i) {
    if (dropped[static_cast<size_t>(order[i])]) continue;
    const HalfSpace& a = hs[static_cast<size_t>(order[i])];
    for (size_t j = i + 1; j < order.size(); ++j) {
      const HalfSpace& b = hs[static_cast<size_t>(order[j])];
      if (b.normal[0] - a.normal[0] > 2.0 * sin_tol) break;
      if (a.normal.dot(b.normal) < 0.0) continue;
      Vec d = a.normal.v - b.normal.v;
      if (d.norm() > sin_tol) continue;
      // keep the tighter constraint
      if (b.offset >= a.offset)
        dropped[static_cast<size_t>(order[j])] = 1;
      else
        dropped[static_cast<size_t>(order[i])] = 1;
    }
  }
  std::vector<HalfSpace> kept;
  kept.reserve(hs.size());
  for (size_t i = 0; i < hs.size(); ++i)
    if (!dropped[i]) kept.push_back(hs[i]);
  return kept;
}

Vec orthogonal_complement_direction(const std::vector<Vec>& vs, int dim) {
  // Gram-Schmidt basis of span(vs), then the largest residual axis direction
  std::vector<Vec> basis;
  for (const Vec& v : vs) {
    Vec r = v;
    for (const Vec& b : basis) r = r - b * b.dot(r);
    if (r.norm() > 1e-8) basis.push_back(r.normalized());
    if (static_cast<int>(basis.size()) == dim) break;
  }
  Vec best = Vec::zero(dim);
  double best_norm = -1.0;
  for (int k = 0; k < dim; ++k) {
    Vec r = Vec::axis(dim, k);
    for (const Vec& b : basis) r = r - b * b.dot(r);
    if (r.norm() > best_norm) {
      best_norm = r.norm();
      best = r;
    }
  }
  return best.normalized();
}

}  // namespace

Polytope halfspace_intersection(const std::vector<HalfSpace>& hs_in, int dim,
                                const Tolerance& tol) {
  tol.validate();
  if (dim != 2 && dim != 3)
    throw DomainError("halfspace_intersection supports dim in {2,3}");
  std::vector<HalfSpace> hs = dedupe_halfspaces(hs_in);
  if (hs.size() < static_cast<size_t>(dim + 1))
    throw UnboundedError("halfspace_intersection: too few half-spaces",
                         Vec::zero(dim));

  std::vector<Vec> dual;
  dual.reserve(hs.size());
  for (const HalfSpace& h : hs) dual.push_back(h.normal.v * (1.0 / h.offset));

  // bounded iff the origin is interior to the hull of the dual points
  if (auto sep = separate_origin(dual, tol.hull_tol))
    throw UnboundedError(
        "halfspace_intersection: normals do not positively span", sep->direction);

  Polytope D;
  try {
    D = convex_hull(dual, dim, tol);
  } catch (const DegenerateInputError&) {
    throw UnboundedError(
        "halfspace_intersection: normals span a lower-dimensional subspace",
        orthogonal_complement_direction(dual, dim));
  }
  double min_off = 1e300;
  int min_f = 0;
  for (size_t f = 0; f < D.facets.size(); ++f)
    if (D.facets[f].offset < min_off) {
      min_off = D.facets[f].offset;
      min_f = static_cast<int>(f);
    }
  if (min_off <= tol.hull_tol)
    throw UnboundedError("halfspace_intersection: intersection is unbounded",
                         D.facets[static_cast<size_t>(min_f)].normal.v);

  std::vector<Vec> primal;
  primal.reserve(D.facets.size());
  for (const Facet& f : D.facets) primal.push_back(f.normal.v * (1.0 / f.offset));
  Polytope W = convex_hull(primal, dim, tol);
  W.origin_interior = true;
  return W;
}

double support(const Polytope& W, const UnitVector& u) {
  double h = -1e300;
  for (const Vec& v : W.vertices) h = std::max(h, u.dot(v));
  return h;
}

double radial(const Polytope& W, const UnitVector& u) {
  if (!W.origin_interior)
    throw DomainError("radial requires the origin interior");
  double r = 1e300;
  for (const Facet& f : W.facets) {
    double d = f.normal.dot(u.v);
    if (d > 1e-14) r = std::min(r, f.offset / d);
  }
  if (r >= 1e300) throw DomainError("radial: no facet ahead of direction");
  return r;
}

bool contains(const Polytope& W, const Vec& x, double tol) {
  for (const Facet& f : W.facets)
    if (f.normal.dot(x) > f.offset + tol) return false;
  return true;
}

double interior_depth(const Polytope& W, const Vec& x) {
  double depth = 1e300;
  for (const Facet& f : W.facets)
    depth = std::min(depth, f.offset - f.normal.dot(x));
  return depth;
}

Polytope polar_body(const Polytope& W, const Tolerance& tol) {
  if (!W.origin_interior)
    throw DomainError("polar_body requires the origin interior");
  std::vector<HalfSpace> hs;
  hs.reserve(W.vertices.size());
  for (const Vec& v : W.vertices) {
    double n = v.norm();
    hs.emplace_back(UnitVector(v), 1.0 / n);
  }
  return halfspace_intersection(hs, W.dim, tol);
}

Polytope reflect(const Polytope& W, const Tolerance& tol) {
  std::vector<Vec> neg;
  neg.reserve(W.vertices.size());
  for (const Vec& v : W.vertices) neg.push_back(-v);
  Polytope R = convex_hull(neg, W.dim, tol);
  R.origin_interior = W.origin_interior;
  return R;
}

double facet_diameter(const Polytope& W, int facet) {
  const auto& ring = W.facets[static_cast<size_t>(facet)].ring;
  double d = 0.0;
  for (size_t i = 0; i < ring.size(); ++i)
    for (size_t j = i + 1; j < ring.size(); ++j)
      d = std::max(d, distance(W.vertices[static_cast<size_t>(ring[i])],
                               W.vertices[static_cast<size_t>(ring[j])]));
  return d;
}

std::vector<std::pair<int, double>> flat_spots(const Polytope& W,
                                               double diameter_threshold) {
  std::vector<std::pair<int, double>> out;
  for (size_t f = 0; f < W.facets.size(); ++f) {
    double d = facet_diameter(W, static_cast<int>(f));
    if (d > diameter_threshold) out.emplace_back(static_cast<int>(f), d);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

namespace {

double point_segment_distance(const Vec& x, const Vec& a, const Vec& b) {
  Vec d = b - a;
  double len2 = d.norm2();
  double t = len2 > 0.0 ? std::clamp((x - a).dot(d) / len2, 0.0, 1.0) : 0.0;
  return distance(x, a + d * t);
}

double point_facet_distance(const Polytope& W, int facet, const Vec& x) {
  const Facet& f = W.facets[static_cast<size_t>(facet)];
  if (W.dim == 2) {
    return point_segment_distance(x, W.vertices[static_cast<size_t>(f.ring[0])],
                                  W.vertices[static_cast<size_t>(f.ring[1])]);
  }
  double h = f.normal.dot(x) - f.offset;
  Vec proj = x - f.normal.v * h;
  bool inside = true;
  for (size_t i = 0; i < f.ring.size() && inside; ++i) {
    const Vec& a = W.vertices[static_cast<size_t>(f.ring[i])];
    const Vec& b = W.vertices[static_cast<size_t>(f.ring[(i + 1) % f.ring.size()])];
    inside = (b - a).cross(proj - a).dot(f.normal.v) >= -1e-12;
  }
  if (inside) return std::fabs(h);
  double d = 1e300;
  for (size_t i = 0; i < f.ring.size(); ++i) {
    const Vec& a = W.vertices[static_cast<size_t>(f.ring[i])];
    const Vec& b = W.vertices[static_cast<size_t>(f.ring[(i + 1) % f.ring.size()])];
    d = std::min(d, point_segment_distance(x, a, b));
  }
  return d;
}

}  // namespace

double distance_to_polytope(const Polytope& W, const Vec& x) {
  if (contains(W, x, 0.0)) return 0.0;
  double d = 1e300;
  for (size_t f = 0; f < W.facets.size(); ++f)
    d = std::min(d, point_facet_distance(W, static_cast<int>(f), x));
  return d;
}

double hausdorff_distance(const Polytope& A, const Polytope& B) {
  if (A.dim != B.dim)
    throw DomainError("hausdorff_distance: dimension mismatch");
  double h = 0.0;
  for (const Vec& v : A.vertices) h = std::max(h, distance_to_polytope(B, v));
  for (const Vec& v : B.vertices) h = std::max(h, distance_to_polytope(A, v));
  // fixed support sweep; a lower bound, folded in as a cross-check
  static const std::vector<UnitVector> sweep2 = sphere_mesh(1, 256);
  static const std::vector<UnitVector> sweep3 = sphere_mesh(2, 2);
  for (const UnitVector& u : (A.dim == 2 ? sweep2 : sweep3))
    h = std::max(h, std::fabs(support(A, u) - support(B, u)));
  return h;
}

}  // namespace wulffkit
