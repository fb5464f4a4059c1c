// 2D convex hull: Andrew's monotone chain with tolerance-based pruning of
// collinear chain points. Output rings are counterclockwise starting at the
// lexicographically smallest vertex.
#include <algorithm>

#include "hull_internal.hpp"

namespace wulffkit::detail {

std::vector<Vec> dedupe_points(const std::vector<Vec>& points, double tol) {
  std::vector<Vec> sorted = points;
  std::sort(sorted.begin(), sorted.end(),
            [](const Vec& a, const Vec& b) { return a.lex_less(b); });
  std::vector<Vec> kept;
  kept.reserve(sorted.size());
  for (const Vec& p : sorted) {
    bool dup = false;
    for (size_t j = kept.size(); j-- > 0;) {
      if (p[0] - kept[j][0] > tol) break;  // window closed
      if (distance(p, kept[j]) <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  return kept;
}

namespace {

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

Polytope hull2d(const std::vector<Vec>& points, const Tolerance& tol) {
  std::vector<Vec> pts = dedupe_points(points, tol.hull_tol);
  if (pts.size() < 3)
    throw DegenerateInputError("convex_hull: fewer than 3 distinct points",
                               pts.size() <= 1 ? 0 : 1);

  // pop while the middle point is within hull_tol of the new chord; the
  // area/base quotient is the perpendicular distance of b from chord a-p
  auto build_chain = [&](auto begin, auto end) {
    std::vector<Vec> chain;
    for (auto it = begin; it != end; ++it) {
      const Vec& p = *it;
      while (chain.size() >= 2) {
        const Vec& a = chain[chain.size() - 2];
        const Vec& b = chain.back();
        double area = cross2(a, b, p);
        double base = distance(a, p);
        if (area <= tol.hull_tol * base)
          chain.pop_back();
        else
          break;
      }
      chain.push_back(p);
    }
    return chain;
  };

  std::vector<Vec> lower = build_chain(pts.begin(), pts.end());
  std::vector<Vec> upper = build_chain(pts.rbegin(), pts.rend());
  if (lower.size() < 2 || (lower.size() == 2 && upper.size() == 2))
    throw DegenerateInputError("convex_hull: points are collinear", 1);

  std::vector<Vec> ring = lower;
  ring.pop_back();
  ring.insert(ring.end(), upper.begin(), upper.end() - 1);
  if (ring.size() < 3)
    throw DegenerateInputError("convex_hull: points are collinear", 1);

  Polytope W;
  W.dim = 2;
  W.vertices = std::move(ring);
  const int n = static_cast<int>(W.vertices.size());
  W.facets.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    Vec d = W.vertices[static_cast<size_t>(j)] - W.vertices[static_cast<size_t>(i)];
    Facet f;
    f.normal = UnitVector(Vec(d[1], -d[0]));  // outward for a CCW ring
    f.offset = f.normal.dot(W.vertices[static_cast<size_t>(i)]);
    f.ring = {i, j};
    W.facets.push_back(std::move(f));
  }
  W.facet_adjacency.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    W.facet_adjacency[static_cast<size_t>(i)] = {(i + n - 1) % n, (i + 1) % n};
  double min_off = 1e300;
  for (const Facet& f : W.facets) min_off = std::min(min_off, f.offset);
  W.origin_interior = min_off > tol.hull_tol;
  return W;
}

}  // namespace wulffkit::detail
