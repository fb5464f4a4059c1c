#include "wulffkit/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wulffkit {

IcosphereMesh icosahedron() {
  IcosphereMesh m;
  m.level = 0;
  m.vertices.reserve(12);
  m.vertices.push_back(Vec(0.0, 0.0, 1.0));  // north pole
  const double z = 1.0 / std::sqrt(5.0);
  const double r = 2.0 / std::sqrt(5.0);
  for (int k = 0; k < 5; ++k) {  // upper ring
    double a = 2.0 * kPi * k / 5.0;
    m.vertices.push_back(Vec(r * std::cos(a), r * std::sin(a), z));
  }
  for (int k = 0; k < 5; ++k) {  // lower ring, offset by 36 degrees
    double a = 2.0 * kPi * k / 5.0 + kPi / 5.0;
    m.vertices.push_back(Vec(r * std::cos(a), r * std::sin(a), -z));
  }
  m.vertices.push_back(Vec(0.0, 0.0, -1.0));  // south pole

  auto add = [&m](int a, int b, int c) {
    // orient outward: normal of (a,b,c) must point away from the origin
    const Vec& va = m.vertices[static_cast<size_t>(a)];
    const Vec& vb = m.vertices[static_cast<size_t>(b)];
    const Vec& vc = m.vertices[static_cast<size_t>(c)];
    Vec n = (vb - va).cross(vc - va);
    if (n.dot(va + vb + vc) < 0.0)
      m.faces.push_back({a, c, b});
    else
      m.faces.push_back({a, b, c});
  };

  for (int k = 0; k < 5; ++k) {
    int u0 = 1 + k, u1 = 1 + (k + 1) % 5;
    int l0 = 6 + k, l1 = 6 + (k + 1) % 5;
    add(0, u0, u1);        // top cap
    add(u0, l0, u1);       // upper strip
    add(l0, l1, u1);       // lower strip
    add(11, l1, l0);       // bottom cap
  }
  return m;
}

static IcosphereMesh subdivide(const IcosphereMesh& in) {
  IcosphereMesh out;
  out.level = in.level + 1;
  out.vertices = in.vertices;
  out.faces.reserve(in.faces.size() * 4);

  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Vec v = (out.vertices[static_cast<size_t>(a)] +
             out.vertices[static_cast<size_t>(b)])
                .normalized();
    int idx = static_cast<int>(out.vertices.size());
    out.vertices.push_back(v);
    midpoint.emplace(key, idx);
    return idx;
  };

  for (const auto& f : in.faces) {
    int a = f[0], b = f[1], c = f[2];
    int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    out.faces.push_back({a, ab, ca});
    out.faces.push_back({b, bc, ab});
    out.faces.push_back({c, ca, bc});
    out.faces.push_back({ab, bc, ca});
  }
  return out;
}

IcosphereMesh icosphere(int level) {
  if (level < 1) throw DomainError("icosphere level must be >= 1");
  IcosphereMesh m = icosahedron();
  for (int i = 0; i < level; ++i) m = subdivide(m);
  return m;
}

std::vector<std::vector<int>> IcosphereMesh::vertex_neighbors() const {
  std::vector<std::vector<int>> nb(vertices.size());
  auto link = [&nb](int a, int b) {
    auto& v = nb[static_cast<size_t>(a)];
    if (std::find(v.begin(), v.end(), b) == v.end()) v.push_back(b);
  };
  for (const auto& f : faces) {
    link(f[0], f[1]);
    link(f[1], f[0]);
    link(f[1], f[2]);
    link(f[2], f[1]);
    link(f[2], f[0]);
    link(f[0], f[2]);
  }
  for (auto& v : nb) std::sort(v.begin(), v.end());
  return nb;
}

std::vector<std::pair<int, int>> IcosphereMesh::collinear_pairs(
    int v, const std::vector<std::vector<int>>& neighbors) const {
  std::vector<std::pair<int, int>> pairs;
  const auto& nb = neighbors[static_cast<size_t>(v)];
  const Vec& pv = vertices[static_cast<size_t>(v)];
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) {
      const Vec& a = vertices[static_cast<size_t>(nb[i])];
      const Vec& b = vertices[static_cast<size_t>(nb[j])];
      // coplanar with the origin and on opposite sides of v
      double triple = a.cross(b).dot(pv);
      if (std::fabs(triple) > 1e-9) continue;
      Vec ta = a - pv * a.dot(pv);
      Vec tb = b - pv * b.dot(pv);
      if (ta.dot(tb) < 0.0) pairs.emplace_back(nb[i], nb[j]);
    }
  }
  return pairs;
}

double IcosphereMesh::max_edge_angle() const {
  double worst = 0.0;
  for (const auto& f : faces) {
    for (int e = 0; e < 3; ++e) {
      const Vec& a = vertices[static_cast<size_t>(f[static_cast<size_t>(e)])];
      const Vec& b =
          vertices[static_cast<size_t>(f[static_cast<size_t>((e + 1) % 3)])];
      double d = std::clamp(a.dot(b), -1.0, 1.0);
      worst = std::max(worst, std::acos(d));
    }
  }
  return worst;
}

int IcosphereMesh::locate_triangle(const Vec& dir,
                                   std::array<double, 3>& bary) const {
  int best = -1;
  double best_min = -1e30;
  for (size_t t = 0; t < faces.size(); ++t) {
    const auto& f = faces[t];
    const Vec& a = vertices[static_cast<size_t>(f[0])];
    const Vec& b = vertices[static_cast<size_t>(f[1])];
    const Vec& c = vertices[static_cast<size_t>(f[2])];
    // gnomonic barycentric coordinates: scale dir onto the triangle plane
    Vec n = (b - a).cross(c - a);
    double denom = n.dot(dir);
    if (denom <= 0.0) continue;  // wrong hemisphere or grazing
    Vec p = dir * (n.dot(a) / denom);
    double area = n.norm2();
    double w0 = (b - p).cross(c - p).dot(n) / area;
    double w1 = (c - p).cross(a - p).dot(n) / area;
    double w2 = 1.0 - w0 - w1;
    double mn = std::min({w0, w1, w2});
    if (mn > best_min) {
      best_min = mn;
      best = static_cast<int>(t);
      bary = {w0, w1, w2};
    }
    if (mn >= 0.0) break;  // strictly inside; done
  }
  if (best < 0) throw DomainError("direction not covered by icosphere mesh");
  return best;
}

std::vector<UnitVector> sphere_mesh(int n, int level) {
  if (n != 1 && n != 2) throw DomainError("sphere_mesh supports n in {1,2}");
  if (level < 1) throw DomainError("sphere_mesh level must be >= 1");
  std::vector<UnitVector> dirs;
  if (n == 1) {
    dirs.reserve(static_cast<size_t>(level));
    for (int k = 0; k < level; ++k)
      dirs.push_back(UnitVector::from_angle(2.0 * kPi * k / level));
  } else {
    IcosphereMesh m = icosphere(level);
    dirs.reserve(m.vertices.size());
    for (const Vec& v : m.vertices) {
      UnitVector u;
      u.v = v;  // already unit by construction
      dirs.push_back(u);
    }
  }
  return dirs;
}

double mesh_edge_angle(int n, int level) {
  if (n == 1) return 2.0 * kPi / level;
  return icosphere(level).max_edge_angle();
}

}  // namespace wulffkit
