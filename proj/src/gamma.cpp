#include "wulffkit/gamma.hpp"

#include <algorithm>
#include <cmath>

namespace wulffkit {

double GammaField::eval(const UnitVector& theta) const {
  if (theta.dim() != ambient_dim())
    throw DomainError("gamma eval: direction dimension mismatch");
  switch (kind_) {
    case Kind::constant:
      return params_[0];
    case Kind::ellipse: {
      double s = 0.0;
      for (int i = 0; i < ambient_dim(); ++i) {
        double t = params_[static_cast<size_t>(i)] * theta[i];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case Kind::cube: {
      double s = 0.0;
      for (int i = 0; i < ambient_dim(); ++i)
        s += params_[static_cast<size_t>(i)] * std::fabs(theta[i]);
      return s;
    }
    case Kind::lens:
      return std::min(1.0 + 0.5 * theta[0], 1.0 - 0.5 * theta[0]);
    case Kind::trig_poly: {
      if (n_ == 1) {
        double a = std::atan2(theta[1], theta[0]);
        double s = params_[0];
        size_t k = 1;
        for (size_t i = 1; i + 1 < params_.size(); i += 2, ++k)
          s += params_[i] * std::cos(static_cast<double>(k) * a) +
               params_[i + 1] * std::sin(static_cast<double>(k) * a);
        return s;
      }
      double s = params_[0];
      s += params_[1] * theta[0] + params_[2] * theta[1] + params_[3] * theta[2];
      s += params_[4] * theta[0] * theta[0] + params_[5] * theta[1] * theta[1] +
           params_[6] * theta[2] * theta[2];
      s += params_[7] * theta[0] * theta[1] + params_[8] * theta[0] * theta[2] +
           params_[9] * theta[1] * theta[2];
      return s;
    }
    case Kind::poly_support: {
      double h = -1e300;
      for (const Vec& v : poly_vertices_) h = std::max(h, theta.dot(v));
      return h;
    }
    case Kind::sampled: {
      if (n_ == 1) {
        double a = theta.angle();
        // periodic linear interpolation over sorted sample angles
        auto it = std::upper_bound(sample_angles_.begin(), sample_angles_.end(), a);
        size_t hi = static_cast<size_t>(it - sample_angles_.begin());
        size_t lo = (hi + sample_angles_.size() - 1) % sample_angles_.size();
        hi = hi % sample_angles_.size();
        double a_lo = sample_angles_[lo];
        double a_hi = sample_angles_[hi];
        double span = a_hi - a_lo;
        if (span <= 0.0) span += 2.0 * kPi;
        double t = a - a_lo;
        if (t < 0.0) t += 2.0 * kPi;
        t /= span;
        return (1.0 - t) * sample_values_[lo] + t * sample_values_[hi];
      }
      std::array<double, 3> bary{};
      int tri = sample_mesh_->locate_triangle(theta.v, bary);
      const auto& f = sample_mesh_->faces[static_cast<size_t>(tri)];
      double s = 0.0;
      for (int k = 0; k < 3; ++k)
        s += std::max(bary[static_cast<size_t>(k)], 0.0) *
             sample_values_[static_cast<size_t>(f[static_cast<size_t>(k)])];
      return s;
    }
  }
  throw DomainError("gamma eval: unknown kind");
}

void GammaField::validate(const Tolerance& tol) const {
  int probe_level = n_ == 1 ? 720 : 3;
  double lo = 1e300;
  for (const UnitVector& u : sphere_mesh(n_, probe_level))
    lo = std::min(lo, eval(u));
  if (!(lo > tol.abs_tol))
    throw DomainError("gamma field is not strictly positive on the probe mesh");
}

static void check_n(int n) {
  if (n != 1 && n != 2) throw DomainError("gamma fields live on S^1 or S^2");
}

GammaField GammaField::constant(int n, double r) {
  check_n(n);
  if (!(r > 0.0)) throw DomainError("constant gamma must be positive");
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::constant;
  g.params_ = {r};
  g.desc_ = "constant(" + std::to_string(r) + ")";
  return g;
}

GammaField GammaField::ellipse(int n, std::vector<double> semi_axes) {
  check_n(n);
  if (semi_axes.size() != static_cast<size_t>(n + 1))
    throw DomainError("ellipse gamma needs n+1 semi-axes");
  for (double a : semi_axes)
    if (!(a > 0.0)) throw DomainError("ellipse semi-axes must be positive");
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::ellipse;
  g.params_ = std::move(semi_axes);
  g.desc_ = n == 1 ? "ellipse" : "ellipsoid";
  return g;
}

GammaField GammaField::cube_support(int n, std::vector<double> scales) {
  check_n(n);
  if (scales.size() != static_cast<size_t>(n + 1))
    throw DomainError("cube gamma needs n+1 scales");
  for (double a : scales)
    if (!(a > 0.0)) throw DomainError("cube scales must be positive");
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::cube;
  g.params_ = std::move(scales);
  g.desc_ = "cube-support";
  return g;
}

GammaField GammaField::lens() {
  GammaField g;
  g.n_ = 1;
  g.kind_ = Kind::lens;
  g.desc_ = "lens";
  return g;
}

GammaField GammaField::random_trig_poly(int n, uint64_t seed,
                                        bool convex_regular) {
  check_n(n);
  SplitMix64 rng(seed);
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::trig_poly;
  g.desc_ = "trig-poly(seed=" + std::to_string(seed) + ")";
  if (n == 1) {
    const int K = 4;
    std::vector<double> coeff;
    coeff.push_back(1.0);
    double weighted = 0.0;  // sum (1 + k^2) * |coef|, bounds gamma + gamma''
    for (int k = 1; k <= K; ++k) {
      double a = rng.uniform(-1.0, 1.0);
      double b = rng.uniform(-1.0, 1.0);
      coeff.push_back(a);
      coeff.push_back(b);
      weighted += (1.0 + k * k) * (std::fabs(a) + std::fabs(b));
    }
    // scale harmonics: convex_regular keeps gamma + gamma'' > 0 so the field
    // is a support function; otherwise only positivity is enforced
    double budget = convex_regular ? 0.5 : 0.0;
    double plain = 0.0;
    for (int k = 1; k <= K; ++k)
      plain += std::fabs(coeff[static_cast<size_t>(2 * k - 1)]) +
               std::fabs(coeff[static_cast<size_t>(2 * k)]);
    double scale = convex_regular ? (weighted > 0 ? budget / weighted : 0.0)
                                  : (plain > 0 ? 0.6 / plain : 0.0);
    for (size_t i = 1; i < coeff.size(); ++i) coeff[i] *= scale;
    g.params_ = std::move(coeff);
  } else {
    std::vector<double> coeff(10, 0.0);
    coeff[0] = 1.0;
    double lin_budget = convex_regular ? 0.10 : 0.25;
    double quad_budget = convex_regular ? 0.10 : 0.30;
    double lin_sum = 0.0, quad_sum = 0.0;
    for (int i = 1; i <= 3; ++i) {
      coeff[static_cast<size_t>(i)] = rng.uniform(-1.0, 1.0);
      lin_sum += std::fabs(coeff[static_cast<size_t>(i)]);
    }
    for (int i = 4; i <= 9; ++i) {
      coeff[static_cast<size_t>(i)] = rng.uniform(-1.0, 1.0);
      quad_sum += std::fabs(coeff[static_cast<size_t>(i)]);
    }
    if (lin_sum > 0)
      for (int i = 1; i <= 3; ++i)
        coeff[static_cast<size_t>(i)] *= lin_budget / lin_sum;
    if (quad_sum > 0)
      for (int i = 4; i <= 9; ++i)
        coeff[static_cast<size_t>(i)] *= quad_budget / quad_sum;
    g.params_ = std::move(coeff);
  }
  g.validate();
  return g;
}

GammaField GammaField::poly_support(int n, std::vector<Vec> vertices) {
  check_n(n);
  if (vertices.empty()) throw DomainError("poly_support: no vertices");
  for (const Vec& v : vertices)
    if (v.dim != n + 1) throw DomainError("poly_support: dimension mismatch");
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::poly_support;
  g.poly_vertices_ = std::move(vertices);
  g.desc_ = "poly-support(" + std::to_string(g.poly_vertices_.size()) + "v)";
  g.validate();  // positivity fails unless the origin is interior
  return g;
}

GammaField GammaField::sampled(int n, std::vector<UnitVector> directions,
                               std::vector<double> values,
                               const Tolerance& tol) {
  check_n(n);
  if (directions.size() != values.size() || directions.empty())
    throw DomainError("sampled gamma: direction/value size mismatch");
  for (double v : values)
    if (!(v > 0.0)) throw DomainError("sampled gamma: values must be positive");
  GammaField g;
  g.n_ = n;
  g.kind_ = Kind::sampled;
  g.desc_ = "sampled(" + std::to_string(values.size()) + ")";
  if (n == 1) {
    std::vector<std::pair<double, double>> av;
    av.reserve(directions.size());
    for (size_t i = 0; i < directions.size(); ++i)
      av.emplace_back(directions[i].angle(), values[i]);
    std::sort(av.begin(), av.end());
    for (size_t i = 1; i < av.size(); ++i)
      if (av[i].first - av[i - 1].first <= tol.hull_tol)
        throw DomainError("sampled gamma: duplicate directions");
    for (auto& [a, v] : av) {
      g.sample_angles_.push_back(a);
      g.sample_values_.push_back(v);
    }
  } else {
    // the table must be an icosphere vertex set; match by nearest vertex
    int level = -1;
    for (int l = 1; l <= 8; ++l) {
      size_t count = static_cast<size_t>(10 * (1 << (2 * l)) + 2);
      if (count == directions.size()) {
        level = l;
        break;
      }
    }
    if (level < 0)
      throw DomainError("sampled gamma on S^2 must list an icosphere vertex set");
    auto mesh = std::make_shared<IcosphereMesh>(icosphere(level));
    std::vector<double> ordered(mesh->vertices.size(), -1.0);
    for (size_t i = 0; i < directions.size(); ++i) {
      int best = -1;
      double best_d = 1e300;
      for (size_t m = 0; m < mesh->vertices.size(); ++m) {
        double d = distance(directions[i].v, mesh->vertices[m]);
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(m);
        }
      }
      if (best_d > 1e-6 || ordered[static_cast<size_t>(best)] >= 0.0)
        throw DomainError(
            "sampled gamma on S^2: directions do not match icosphere vertices");
      ordered[static_cast<size_t>(best)] = values[i];
    }
    g.sample_mesh_ = std::move(mesh);
    g.sample_values_ = std::move(ordered);
  }
  return g;
}

GammaField IntegrandSamples::as_field(const Tolerance& tol) const {
  GammaField g = GammaField::sampled(n, directions, values, tol);
  return g;
}

}  // namespace wulffkit
