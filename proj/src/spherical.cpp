#include "wulffkit/spherical.hpp"

#include <algorithm>
#include <cmath>

#include "wulffkit/nnls.hpp"
#include "wulffkit/wulff_ops.hpp"

namespace wulffkit {

bool cap_contains(const SpherePoint& P, const SpherePoint& Q,
                  const Tolerance& tol) {
  if (P.dim() != Q.dim()) throw DomainError("cap_contains: dimension mismatch");
  return P.dot(Q) >= -tol.abs_tol;
}

SpherePoint arc_point(const SpherePoint& P, const SpherePoint& Q, double t,
                      const Tolerance& tol) {
  if (t < 0.0 || t > 1.0) throw DomainError("arc parameter outside [0,1]");
  if (P.dot(Q) <= -1.0 + tol.abs_tol)
    throw DomainError("arc undefined for antipodes");
  Vec m = P.v * (1.0 - t) + Q.v * t;
  SpherePoint out;
  out.v = m.normalized();
  return out;
}

Hemisphericity is_hemispherical(const std::vector<SpherePoint>& points,
                                const Tolerance& tol) {
  if (points.empty()) throw DomainError("is_hemispherical: empty input");
  std::vector<Vec> raw;
  raw.reserve(points.size());
  for (const SpherePoint& p : points) raw.push_back(p.v);
  Hemisphericity out;
  if (auto sep = separate_origin(raw, tol.abs_tol)) {
    SpherePoint w;
    w.v = sep->direction;
    out.witness = w;
    out.margin = sep->margin;
  } else {
    out.certificate = origin_combination(raw, 1e-6);
  }
  return out;
}

SphericalConvexBody s_conv(const std::vector<SpherePoint>& points,
                           const Tolerance& tol) {
  SphericalConvexBody body;
  for (const SpherePoint& p : points) {
    bool dup = false;
    for (const Vec& g : body.generators)
      if (distance(g, p.v) <= tol.hull_tol) {
        dup = true;
        break;
      }
    if (!dup) body.generators.push_back(p.v);
  }
  if (body.generators.empty()) throw DomainError("s_conv: empty generator set");
  std::vector<SpherePoint> gens;
  for (const Vec& g : body.generators) {
    SpherePoint s;
    s.v = g;
    gens.push_back(s);
  }
  Hemisphericity h = is_hemispherical(gens, tol);
  if (h.witness) body.witness = h.witness->v;
  return body;
}

bool polar_contains(const SphericalConvexBody& body, const SpherePoint& Q,
                    const Tolerance& tol) {
  for (const Vec& g : body.generators)
    if (Q.dot(g) < -tol.abs_tol) return false;
  return true;
}

std::vector<Vec> dual_cone_rays(const std::vector<Vec>& generators,
                                const Tolerance& tol) {
  std::vector<Vec> rays;
  for (size_t i = 0; i < generators.size(); ++i) {
    for (size_t j = i + 1; j < generators.size(); ++j) {
      Vec c = generators[i].cross(generators[j]);
      double n = c.norm();
      if (n <= 1e-12) continue;
      for (double s : {1.0, -1.0}) {
        Vec r = c * (s / n);
        bool ok = true;
        for (const Vec& g : generators)
          if (r.dot(g) < -tol.abs_tol) {
            ok = false;
            break;
          }
        if (!ok) continue;
        bool dup = false;
        for (const Vec& e : rays)
          if (e.dot(r) > 1.0 - 1e-10) {
            dup = true;
            break;
          }
        if (!dup) rays.push_back(r);
      }
    }
  }
  return rays;
}

namespace {

std::vector<SpherePoint> sampled_circle(const Vec& axis, int count) {
  // orthonormal basis of the plane orthogonal to axis
  Vec u = std::fabs(axis[0]) < 0.9 ? Vec(1.0, 0.0, 0.0) : Vec(0.0, 1.0, 0.0);
  u = (u - axis * axis.dot(u)).normalized();
  Vec v = axis.cross(u);
  std::vector<SpherePoint> out;
  out.reserve(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    double a = 2.0 * kPi * k / count;
    SpherePoint p;
    p.v = u * std::cos(a) + v * std::sin(a);
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<SpherePoint> polar_boundary(const SphericalConvexBody& body,
                                        int samples_per_arc,
                                        const Tolerance& tol) {
  if (body.generators.front().dim != 3)
    throw DomainError("polar_boundary is defined on S^2 bodies");
  if (!body.witness)
    throw DomainError("polar_boundary requires a hemispherical body");

  // rank of the generator span decides the shape of the boundary
  std::vector<Vec> rays = dual_cone_rays(body.generators, tol);
  if (rays.empty()) {
    // all generators parallel: the polar is the cap of the common direction
    return sampled_circle(body.generators.front(), 8 * samples_per_arc);
  }
  // nonempty interior iff the generators can be strictly separated from the
  // polar side: -witness has positive dot with every generator
  Vec inside = -(*body.witness);
  for (const Vec& g : body.generators)
    if (inside.dot(g) <= tol.abs_tol)
      throw DomainError("polar_boundary: polar set has empty interior");

  if (rays.size() == 2 && rays[0].dot(rays[1]) < -1.0 + 1e-10) {
    // planar generator span: the boundary is a lune through the two rays.
    // Find the extreme generators of the planar cone and follow their
    // orthogonal great circles from one ray to the antipodal one.
    const Vec axis = rays[0];
    Vec g_a = body.generators.front(), g_b = body.generators.front();
    double best = 1.0;
    for (const Vec& g1 : body.generators)
      for (const Vec& g2 : body.generators)
        if (g1.dot(g2) < best) {
          best = g1.dot(g2);
          g_a = g1;
          g_b = g2;
        }
    auto half_arc = [&](const Vec& g) {
      Vec mid = axis.cross(g);
      if (mid.dot(inside) < 0.0) mid = -mid;
      std::vector<SpherePoint> pts;
      for (int k = 0; k <= 2 * samples_per_arc; ++k) {
        double t = kPi * k / (2 * samples_per_arc);
        SpherePoint p;
        p.v = axis * std::cos(t) + mid * std::sin(t);
        pts.push_back(p);
      }
      return pts;
    };
    std::vector<SpherePoint> out = half_arc(g_a);
    std::vector<SpherePoint> back = half_arc(g_b);
    std::reverse(back.begin(), back.end());
    out.insert(out.end(), back.begin() + 1, back.end() - 1);
    return out;
  }

  // full-rank case: order the extreme rays around the central direction
  Vec center = Vec::zero(3);
  for (const Vec& r : rays) center = center + r;
  center = center.normalized();
  Vec u = std::fabs(center[0]) < 0.9 ? Vec(1.0, 0.0, 0.0) : Vec(0.0, 1.0, 0.0);
  u = (u - center * center.dot(u)).normalized();
  Vec v = center.cross(u);
  std::sort(rays.begin(), rays.end(), [&](const Vec& a, const Vec& b) {
    return std::atan2(a.dot(v), a.dot(u)) < std::atan2(b.dot(v), b.dot(u));
  });
  std::vector<SpherePoint> out;
  for (size_t i = 0; i < rays.size(); ++i) {
    const Vec& a = rays[i];
    const Vec& b = rays[(i + 1) % rays.size()];
    for (int k = 0; k < samples_per_arc; ++k) {
      double t = static_cast<double>(k) / samples_per_arc;
      SpherePoint p;
      p.v = (a * (1.0 - t) + b * t).normalized();
      out.push_back(p);
    }
  }
  return out;
}

ProbeReport maehara_check(const std::vector<SpherePoint>& points,
                          int probe_count, uint64_t seed,
                          const Tolerance& tol) {
  Hemisphericity h = is_hemispherical(points, tol);
  if (!h.witness)
    throw DomainError("maehara_check requires a hemispherical input");
  SphericalConvexBody body = s_conv(points, tol);
  const int d = points.front().dim();
  SplitMix64 rng(seed);

  // fixed bag of convex combinations sampling the hull side of the lemma
  std::vector<Vec> combos;
  for (const Vec& g : body.generators) combos.push_back(g);
  const int extra = 64;
  for (int k = 0; k < extra; ++k) {
    std::vector<double> w(body.generators.size());
    double s = 0.0;
    for (double& wi : w) {
      wi = -std::log(1.0 - rng.uniform());
      s += wi;
    }
    Vec z = Vec::zero(d);
    for (size_t i = 0; i < w.size(); ++i)
      z = z + body.generators[i] * (w[i] / s);
    combos.push_back(z.normalized());
  }

  ProbeReport rep;
  rep.seed = seed;
  for (int k = 0; k < probe_count; ++k) {
    Vec q = rng.unit(d);
    double cap_margin = 1e300;
    for (const Vec& g : body.generators)
      cap_margin = std::min(cap_margin, q.dot(g));
    if (std::fabs(cap_margin) <= tol.report_tol) {
      ++rep.skipped_boundary;
      continue;
    }
    double hull_margin = 1e300;
    for (const Vec& z : combos) hull_margin = std::min(hull_margin, q.dot(z));
    bool lhs = cap_margin >= -tol.abs_tol;       // in every generator cap
    bool rhs = hull_margin >= -tol.report_tol;   // no sampled hull point refutes
    ++rep.probes;
    if (lhs != rhs) {
      ++rep.disagreements;
      rep.max_disagreement_margin = std::max(
          rep.max_disagreement_margin, std::fabs(std::min(cap_margin, hull_margin)));
    }
  }
  return rep;
}

ProbeReport double_polar_check(const std::vector<SpherePoint>& points,
                               int probe_count, uint64_t seed,
                               const Tolerance& tol) {
  SphericalConvexBody body = s_conv(points, tol);
  if (!body.witness)
    throw DomainError("double_polar_check requires a hemispherical input");
  const int d = body.generators.front().dim;
  SplitMix64 rng(seed);

  // polar-side members: exact rays on S^2, Moreau complements elsewhere
  std::vector<Vec> polar_members;
  bool have_rays = false;
  if (d == 3) {
    polar_members = dual_cone_rays(body.generators, tol);
    have_rays = polar_members.size() >= 3;
    if (!have_rays) polar_members.clear();
  }
  if (!have_rays) {
    for (int k = 0; k < 64; ++k) {
      Vec z = rng.unit(d);
      Vec y = cone_project(body.generators, z).residual * -1.0;
      if (y.norm() > 1e-9) polar_members.push_back(y.normalized());
    }
  }

  ProbeReport rep;
  rep.seed = seed;
  for (int k = 0; k < probe_count; ++k) {
    Vec q = rng.unit(d);
    NnlsResult proj = cone_project(body.generators, q);
    double cone_dist = proj.distance;

    double polar_margin = 1e300;
    for (const Vec& y : polar_members)
      polar_margin = std::min(polar_margin, q.dot(y));
    if (!have_rays) {
      Vec yq = q - proj.projection;
      if (yq.norm() > 1e-9)
        polar_margin = std::min(polar_margin, q.dot(-yq.normalized()));
    }

    bool in_cone = cone_dist <= tol.abs_tol;
    bool in_double_polar = polar_margin >= -tol.abs_tol;
    bool near_boundary = (!in_cone && cone_dist <= tol.report_tol) ||
                         std::fabs(polar_margin) <= tol.report_tol;
    if (near_boundary) {
      ++rep.skipped_boundary;
      continue;
    }
    ++rep.probes;
    if (in_cone != in_double_polar) {
      ++rep.disagreements;
      rep.max_disagreement_margin =
          std::max(rep.max_disagreement_margin,
                   std::min(cone_dist, std::fabs(polar_margin)));
    }
  }
  return rep;
}

ProbeReport polar_antitone_check(const std::vector<SpherePoint>& subset,
                                 const std::vector<SpherePoint>& superset,
                                 int probe_count, uint64_t seed,
                                 const Tolerance& tol) {
  // every generator of the subset must appear in the superset
  for (const SpherePoint& a : subset) {
    bool found = false;
    for (const SpherePoint& b : superset)
      if (distance(a.v, b.v) <= tol.hull_tol) {
        found = true;
        break;
      }
    if (!found)
      throw DomainError("polar_antitone_check: inputs are not nested");
  }
  const int d = subset.front().dim();
  SplitMix64 rng(seed);
  ProbeReport rep;
  rep.seed = seed;
  for (int k = 0; k < probe_count; ++k) {
    Vec q = rng.unit(d);
    double m_sup = 1e300, m_sub = 1e300;
    for (const SpherePoint& b : superset) m_sup = std::min(m_sup, q.dot(b.v));
    for (const SpherePoint& a : subset) m_sub = std::min(m_sub, q.dot(a.v));
    if (std::fabs(m_sup) <= tol.report_tol || std::fabs(m_sub) <= tol.report_tol) {
      ++rep.skipped_boundary;
      continue;
    }
    ++rep.probes;
    if (m_sup >= -tol.abs_tol && m_sub < -tol.abs_tol) {
      ++rep.disagreements;  // polar of the superset escaped the subset polar
      rep.max_disagreement_margin =
          std::max(rep.max_disagreement_margin, -m_sub);
    }
  }
  return rep;
}

Vec central_project(const SpherePoint& P, const Tolerance& tol) {
  const int d = P.dim();
  double last = P[d - 1];
  if (last <= tol.abs_tol)
    throw DomainError("central projection blows up near the equator");
  Vec out = Vec::zero(d - 1);
  for (int i = 0; i + 1 < d; ++i) out[i] = P[i] / last;
  return out;
}

SpherePoint central_unproject(const Vec& x) {
  Vec lifted = Vec::zero(x.dim + 1);
  for (int i = 0; i < x.dim; ++i) lifted[i] = x[i];
  lifted[x.dim] = 1.0;
  SpherePoint out;
  out.v = lifted.normalized();
  return out;
}

SpherePoint psi_pole(const SpherePoint& P, const Tolerance& tol) {
  const int d = P.dim();
  double c = P[d - 1];  // N . P with N the last-axis pole
  if (std::fabs(c) >= 1.0 - tol.abs_tol)
    throw DomainError("psi is undefined at the poles");
  Vec n = Vec::axis(d, d - 1);
  SpherePoint out;
  out.v = (n - P.v * c) * (1.0 / std::sqrt(1.0 - c * c));
  return out;
}

FactorizationReport inversion_factorization_check(
    const std::vector<PolarPoint>& samples, const Tolerance& tol) {
  FactorizationReport rep;
  for (const PolarPoint& p : samples) {
    Vec direct = invert(p).cartesian();
    SpherePoint lifted = central_unproject(p.cartesian());
    Vec composite = central_project(psi_pole(lifted, tol), tol);
    rep.max_discrepancy =
        std::max(rep.max_discrepancy, distance(direct, composite));
    ++rep.samples;
  }
  return rep;
}

ProbeReport spherical_wulff_route(const GammaField& gamma, int mesh_level,
                                  int probe_count, uint64_t seed,
                                  const Tolerance& tol) {
  std::vector<UnitVector> mesh = sphere_mesh(gamma.n(), mesh_level);
  std::vector<Vec> generators;
  generators.reserve(mesh.size());
  for (const UnitVector& theta : mesh) {
    Vec graph_pt = PolarPoint(theta, gamma.eval(theta)).cartesian();
    generators.push_back(psi_pole(central_unproject(graph_pt), tol).v);
  }
  Polytope W = wulff_shape(gamma, mesh_level, tol);
  const double R = 1.5 * W.circumradius();
  const int d = gamma.ambient_dim();

  SplitMix64 rng(seed);
  ProbeReport rep;
  rep.seed = seed;
  for (int k = 0; k < probe_count; ++k) {
    Vec x = Vec::zero(d);
    for (int i = 0; i < d; ++i) x[i] = rng.uniform(-R, R);
    double margin = -interior_depth(W, x);  // negative inside
    if (std::fabs(margin) <= tol.report_tol) {
      ++rep.skipped_boundary;
      continue;
    }
    SpherePoint lifted = central_unproject(x);
    double cap_margin = 1e300;
    for (const Vec& g : generators)
      cap_margin = std::min(cap_margin, lifted.dot(g));
    bool in_euclid = margin < 0.0;
    bool in_spherical = cap_margin >= -tol.abs_tol;
    ++rep.probes;
    if (in_euclid != in_spherical) {
      ++rep.disagreements;
      rep.max_disagreement_margin = std::max(
          rep.max_disagreement_margin, std::min(std::fabs(margin), std::fabs(cap_margin)));
    }
  }
  return rep;
}

Polytope dual_wulff(const Polytope& W, const Tolerance& tol) {
  if (!W.origin_interior)
    throw DomainError("dual_wulff requires the origin interior");
  // image of the spherical polar under the central projection:
  // (z,1).(v,1) >= 0 for all v in W reduces to z . v >= -1 at the vertices
  std::vector<HalfSpace> hs;
  hs.reserve(W.vertices.size());
  for (const Vec& v : W.vertices) {
    double n = v.norm();
    hs.emplace_back(UnitVector(-v), 1.0 / n);
  }
  return halfspace_intersection(hs, W.dim, tol);
}

DualIntegrandReport dual_integrand_check(const Polytope& W,
                                         const std::vector<UnitVector>& mesh,
                                         const Tolerance& tol) {
  Polytope D = dual_wulff(W, tol);
  IntegrandSamples gamma_D = convex_integrand(D, mesh, tol);
  IntegrandSamples gamma_W = convex_integrand(W, mesh, tol);
  DualIntegrandReport rep;
  for (size_t i = 0; i < mesh.size(); ++i) {
    const UnitVector u = mesh[i];
    rep.max_dev_dual = std::max(
        rep.max_dev_dual, std::fabs(gamma_D.values[i] - 1.0 / radial(W, -u)));
    rep.max_dev_primal = std::max(
        rep.max_dev_primal, std::fabs(gamma_W.values[i] - 1.0 / radial(D, -u)));
  }
  return rep;
}

}  // namespace wulffkit
