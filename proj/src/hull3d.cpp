// 3D convex hull: randomized incremental insertion with conflict lists,
// followed by a post-pass that merges coplanar triangle fans into maximal
// facets and canonicalizes vertex and facet order. Insertion order is shuffled
// with a fixed seed, so output is identical across runs.
#include <algorithm>
#include <map>

#include "hull_internal.hpp"

namespace wulffkit::detail {

namespace {

struct Tri {
  int v[3] = {-1, -1, -1};
  int nbr[3] = {-1, -1, -1};  // nbr[e] faces edge (v[e], v[e+1])
  Vec normal;                 // unit, outward
  double offset = 0.0;
  bool alive = true;
  std::vector<int> conflicts;  // point ids that see this face
};

struct Builder {
  const std::vector<Vec>& pts;
  double eps;  // visibility threshold
  std::vector<Tri> tris;
  std::vector<std::vector<int>> point_faces;  // faces each point sees
  Vec interior;

  explicit Builder(const std::vector<Vec>& p, double e)
      : pts(p), eps(e), point_faces(p.size()) {}

  double height(int t, int q) const {
    return tris[static_cast<size_t>(t)].normal.dot(pts[static_cast<size_t>(q)]) -
           tris[static_cast<size_t>(t)].offset;
  }

  int make_tri(int a, int b, int c) {
    Tri t;
    t.v[0] = a;
    t.v[1] = b;
    t.v[2] = c;
    const Vec& va = pts[static_cast<size_t>(a)];
    Vec n = (pts[static_cast<size_t>(b)] - va).cross(pts[static_cast<size_t>(c)] - va);
    double nn = n.norm();
    if (nn <= 0.0) throw DomainError("convex_hull: degenerate triangle");
    t.normal = n * (1.0 / nn);
    t.offset = t.normal.dot(va);
    tris.push_back(std::move(t));
    return static_cast<int>(tris.size() - 1);
  }

  void add_conflict(int t, int q) {
    tris[static_cast<size_t>(t)].conflicts.push_back(q);
    point_faces[static_cast<size_t>(q)].push_back(t);
  }
};

// Deterministic link-up of triangle neighbors from directed edges.
void link_neighbors(Builder& B, const std::vector<int>& face_ids) {
  std::map<std::pair<int, int>, std::pair<int, int>> half;  // (a,b) -> (tri, e)
  for (int t : face_ids) {
    Tri& tr = B.tris[static_cast<size_t>(t)];
    for (int e = 0; e < 3; ++e) {
      int a = tr.v[e], b = tr.v[(e + 1) % 3];
      auto tw = half.find({b, a});
      if (tw != half.end()) {
        tr.nbr[e] = tw->second.first;
        B.tris[static_cast<size_t>(tw->second.first)].nbr[tw->second.second] = t;
      }
      half[{a, b}] = {t, e};
    }
  }
}

// Merge coplanar fans and emit the canonical polytope.
Polytope finish(Builder& B, const Tolerance& tol) {
  std::vector<int> alive;
  for (size_t t = 0; t < B.tris.size(); ++t)
    if (B.tris[t].alive) alive.push_back(static_cast<int>(t));

  double scale = 1.0;
  for (int t : alive)
    for (int k = 0; k < 3; ++k)
      scale = std::max(scale, B.pts[static_cast<size_t>(B.tris[static_cast<size_t>(t)].v[k])].norm());
  const double plane_tol = tol.hull_tol * scale;

  // group triangles lying on a common plane (tested against the seed plane)
  std::vector<int> group(B.tris.size(), -1);
  std::vector<std::vector<int>> groups;
  for (int seed : alive) {
    if (group[static_cast<size_t>(seed)] >= 0) continue;
    int gid = static_cast<int>(groups.size());
    groups.emplace_back();
    std::vector<int> stack{seed};
    group[static_cast<size_t>(seed)] = gid;
    const Tri& s = B.tris[static_cast<size_t>(seed)];
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      groups[static_cast<size_t>(gid)].push_back(t);
      for (int e = 0; e < 3; ++e) {
        int u = B.tris[static_cast<size_t>(t)].nbr[e];
        if (u < 0 || group[static_cast<size_t>(u)] >= 0) continue;
        const Tri& tu = B.tris[static_cast<size_t>(u)];
        bool coplanar = true;
        for (int k = 0; k < 3 && coplanar; ++k) {
          double d = s.normal.dot(B.pts[static_cast<size_t>(tu.v[k])]) - s.offset;
          coplanar = std::fabs(d) <= plane_tol;
        }
        if (coplanar && s.normal.dot(tu.normal) > 0.0) {
          group[static_cast<size_t>(u)] = gid;
          stack.push_back(u);
        }
      }
    }
  }

  // per group: boundary cycle, collinear pruning, Newell plane
  struct RawFacet {
    std::vector<int> ring;  // source point ids
    Vec normal;
    double offset;
  };
  std::vector<RawFacet> raw;
  raw.reserve(groups.size());
  for (const auto& g : groups) {
    std::map<int, int> next;  // boundary directed edges a -> b
    for (int t : g) {
      const Tri& tr = B.tris[static_cast<size_t>(t)];
      for (int e = 0; e < 3; ++e) {
        int u = tr.nbr[e];
        if (u >= 0 && group[static_cast<size_t>(u)] == group[static_cast<size_t>(t)]) continue;
        next[tr.v[e]] = tr.v[(e + 1) % 3];
      }
    }
    if (next.empty()) throw DomainError("convex_hull: facet merge lost a ring");
    std::vector<int> ring;
    int start = next.begin()->first;
    int cur = start;
    do {
      ring.push_back(cur);
      auto it = next.find(cur);
      if (it == next.end())
        throw DomainError("convex_hull: open facet boundary");
      cur = it->second;
    } while (cur != start && ring.size() <= next.size());
    if (cur != start) throw DomainError("convex_hull: facet boundary not a cycle");

    // prune ring points within hull_tol of the chord of their neighbors
    bool changed = true;
    while (changed && ring.size() > 3) {
      changed = false;
      for (size_t i = 0; i < ring.size() && ring.size() > 3; ++i) {
        const Vec& a = B.pts[static_cast<size_t>(ring[(i + ring.size() - 1) % ring.size()])];
        const Vec& m = B.pts[static_cast<size_t>(ring[i])];
        const Vec& b = B.pts[static_cast<size_t>(ring[(i + 1) % ring.size()])];
        Vec d = b - a;
        double dn = d.norm();
        if (dn <= 0.0) continue;
        double dist = (m - a).cross(d).norm() / dn;
        if (dist <= plane_tol) {
          ring.erase(ring.begin() + static_cast<long>(i));
          changed = true;
          --i;
        }
      }
    }

    RawFacet f;
    f.ring = std::move(ring);
    Vec newell = Vec::zero(3);
    for (size_t i = 0; i < f.ring.size(); ++i) {
      const Vec& a = B.pts[static_cast<size_t>(f.ring[i])];
      const Vec& b = B.pts[static_cast<size_t>(f.ring[(i + 1) % f.ring.size()])];
      newell = newell + a.cross(b);
    }
    const Tri& s = B.tris[static_cast<size_t>(g.front())];
    if (newell.dot(s.normal) < 0.0) {
      std::reverse(f.ring.begin(), f.ring.end());
      newell = -newell;
    }
    f.normal = newell.normalized();
    f.offset = 0.0;
    for (int v : f.ring) f.offset += f.normal.dot(B.pts[static_cast<size_t>(v)]);
    f.offset /= static_cast<double>(f.ring.size());
    raw.push_back(std::move(f));
  }

  // canonical vertex order: lexicographic over the points actually used
  std::map<int, int> remap;
  for (const RawFacet& f : raw)
    for (int v : f.ring) remap.emplace(v, -1);
  std::vector<int> used;
  used.reserve(remap.size());
  for (const auto& [v, _] : remap) used.push_back(v);
  std::sort(used.begin(), used.end(), [&](int a, int b) {
    return B.pts[static_cast<size_t>(a)].lex_less(B.pts[static_cast<size_t>(b)]);
  });
  for (size_t i = 0; i < used.size(); ++i) remap[used[i]] = static_cast<int>(i);

  Polytope W;
  W.dim = 3;
  W.vertices.reserve(used.size());
  for (int v : used) W.vertices.push_back(B.pts[static_cast<size_t>(v)]);
  for (RawFacet& f : raw) {
    Facet out;
    UnitVector n;
    n.v = f.normal;
    out.normal = n;
    out.offset = f.offset;
    out.ring.reserve(f.ring.size());
    for (int v : f.ring) out.ring.push_back(remap[v]);
    size_t best = 0;
    for (size_t i = 1; i < out.ring.size(); ++i)
      if (out.ring[i] < out.ring[best]) best = i;
    std::rotate(out.ring.begin(), out.ring.begin() + static_cast<long>(best),
                out.ring.end());
    W.facets.push_back(std::move(out));
  }
  std::sort(W.facets.begin(), W.facets.end(),
            [](const Facet& a, const Facet& b) { return a.ring < b.ring; });

  W.facet_adjacency.assign(W.facets.size(), {});
  std::map<std::pair<int, int>, int> edge_owner;
  for (size_t fi = 0; fi < W.facets.size(); ++fi) {
    const auto& ring = W.facets[fi].ring;
    for (size_t i = 0; i < ring.size(); ++i) {
      int a = ring[i], b = ring[(i + 1) % ring.size()];
      auto key = std::minmax(a, b);
      auto it = edge_owner.find(key);
      if (it == edge_owner.end()) {
        edge_owner[key] = static_cast<int>(fi);
      } else {
        W.facet_adjacency[fi].push_back(it->second);
        W.facet_adjacency[static_cast<size_t>(it->second)].push_back(
            static_cast<int>(fi));
      }
    }
  }
  for (auto& adj : W.facet_adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  double min_off = 1e300;
  for (const Facet& f : W.facets) min_off = std::min(min_off, f.offset);
  W.origin_interior = min_off > tol.hull_tol;
  return W;
}

}  // namespace

Polytope hull3d(const std::vector<Vec>& points, const Tolerance& tol) {
  std::vector<Vec> pts = dedupe_points(points, tol.hull_tol);
  const int n = static_cast<int>(pts.size());
  if (n < 4)
    throw DegenerateInputError("convex_hull: fewer than 4 distinct points",
                               n <= 1 ? 0 : (n == 2 ? 1 : 2));

  // initial simplex maximizing extent at each step
  int i0 = 0;
  int i1 = -1;
  double best = tol.hull_tol;
  for (int i = 1; i < n; ++i) {
    double d = distance(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(i0)]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) throw DegenerateInputError("convex_hull: zero-dimensional input", 0);
  Vec axis = (pts[static_cast<size_t>(i1)] - pts[static_cast<size_t>(i0)]);
  int i2 = -1;
  best = tol.hull_tol;
  for (int i = 0; i < n; ++i) {
    Vec d = pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(i0)];
    double a = d.cross(axis).norm() / axis.norm();
    if (a > best) {
      best = a;
      i2 = i;
    }
  }
  if (i2 < 0) throw DegenerateInputError("convex_hull: collinear input", 1);
  Vec nrm = (pts[static_cast<size_t>(i1)] - pts[static_cast<size_t>(i0)])
                .cross(pts[static_cast<size_t>(i2)] - pts[static_cast<size_t>(i0)])
                .normalized();
  int i3 = -1;
  best = tol.hull_tol;
  for (int i = 0; i < n; ++i) {
    double h = std::fabs(nrm.dot(pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(i0)]));
    if (h > best) {
      best = h;
      i3 = i;
    }
  }
  if (i3 < 0) throw DegenerateInputError("convex_hull: coplanar input", 2);

  Builder B(pts, tol.hull_tol);
  B.interior = (pts[static_cast<size_t>(i0)] + pts[static_cast<size_t>(i1)] +
                pts[static_cast<size_t>(i2)] + pts[static_cast<size_t>(i3)]) *
               0.25;
  if (nrm.dot(pts[static_cast<size_t>(i3)] - pts[static_cast<size_t>(i0)]) > 0.0)
    std::swap(i1, i2);  // ensure (i0,i1,i2) is outward against i3

  std::vector<int> first4 = {B.make_tri(i0, i1, i2), B.make_tri(i0, i2, i3),
                             B.make_tri(i2, i1, i3), B.make_tri(i1, i0, i3)};
  for (int t : first4) {
    Tri& tr = B.tris[static_cast<size_t>(t)];
    if (tr.normal.dot(B.interior) > tr.offset) {  // flip inward faces
      std::swap(tr.v[1], tr.v[2]);
      tr.normal = -tr.normal;
      tr.offset = -tr.offset;
    }
  }
  link_neighbors(B, first4);

  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    if (i != i0 && i != i1 && i != i2 && i != i3) order.push_back(i);
  SplitMix64 rng(0x77c5581bfd2f0d31ULL);
  rng.shuffle(order);

  for (int q : order)
    for (int t : first4)
      if (B.height(t, q) > B.eps) B.add_conflict(t, q);

  for (int q : order) {
    std::vector<int> visible;
    for (int t : B.point_faces[static_cast<size_t>(q)])
      if (B.tris[static_cast<size_t>(t)].alive) visible.push_back(t);
    if (visible.empty()) continue;  // inside or on the current hull
    std::sort(visible.begin(), visible.end());
    visible.erase(std::unique(visible.begin(), visible.end()), visible.end());

    std::vector<char> is_visible(B.tris.size(), 0);
    for (int t : visible) is_visible[static_cast<size_t>(t)] = 1;

    // horizon: directed edges of visible faces whose twin is hidden
    struct HorizonEdge {
      int a, b, outside;
    };
    std::map<int, HorizonEdge> horizon;  // keyed by source vertex a
    for (int t : visible) {
      const Tri& tr = B.tris[static_cast<size_t>(t)];
      for (int e = 0; e < 3; ++e) {
        int u = tr.nbr[e];
        if (u >= 0 && is_visible[static_cast<size_t>(u)]) continue;
        horizon[tr.v[e]] = {tr.v[e], tr.v[(e + 1) % 3], u};
      }
    }
    if (horizon.empty()) throw DomainError("convex_hull: empty horizon");

    // conflict candidates for the new faces: points seeing a deleted face or
    // one of the retained faces across the horizon
    std::vector<int> candidates;
    for (int t : visible) {
      for (int p : B.tris[static_cast<size_t>(t)].conflicts)
        if (p != q) candidates.push_back(p);
      B.tris[static_cast<size_t>(t)].alive = false;
    }
    for (const auto& [src, e] : horizon) {
      (void)src;
      if (e.outside < 0) continue;
      for (int p : B.tris[static_cast<size_t>(e.outside)].conflicts)
        if (p != q) candidates.push_back(p);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    // walk the horizon cycle, spawning the fan around q
    std::vector<int> fresh;
    int start = horizon.begin()->first;
    int cur = start;
    do {
      auto it = horizon.find(cur);
      if (it == horizon.end()) throw DomainError("convex_hull: broken horizon");
      const HorizonEdge& e = it->second;
      // the horizon edge keeps the orientation it had in the visible face,
      // so (a, b, q) is outward
      fresh.push_back(B.make_tri(e.a, e.b, q));
      cur = e.b;
    } while (cur != start);

    link_neighbors(B, fresh);
    // outer edges attach to the retained faces across the horizon
    for (int t : fresh) {
      Tri& tr = B.tris[static_cast<size_t>(t)];
      for (int e = 0; e < 3; ++e) {
        if (tr.nbr[e] >= 0) continue;
        int a = tr.v[e], b = tr.v[(e + 1) % 3];
        // the retained neighbor holds directed edge (b, a)
        auto it = horizon.find(a);
        int outside = (it != horizon.end() && it->second.b == b)
                          ? it->second.outside
                          : -1;
        if (outside < 0) {
          it = horizon.find(b);
          if (it != horizon.end() && it->second.b == a)
            outside = it->second.outside;
        }
        if (outside < 0) throw DomainError("convex_hull: unmatched horizon edge");
        tr.nbr[e] = outside;
        Tri& out = B.tris[static_cast<size_t>(outside)];
        for (int oe = 0; oe < 3; ++oe)
          if (out.v[oe] == b && out.v[(oe + 1) % 3] == a) out.nbr[oe] = t;
      }
    }

    for (int p : candidates)
      for (int t : fresh)
        if (B.height(t, p) > B.eps) B.add_conflict(t, p);
    B.point_faces[static_cast<size_t>(q)].clear();
  }

  return finish(B, tol);
}

}  // namespace wulffkit::detail
