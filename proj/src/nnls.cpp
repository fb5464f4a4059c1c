#include "wulffkit/nnls.hpp"

#include <algorithm>
#include <cmath>

namespace wulffkit {

namespace {

// Solve G z = r for a small symmetric positive definite system by Gaussian
// elimination with partial pivoting. Returns false when the pivot collapses.
bool solve_spd(std::vector<std::vector<double>> G, std::vector<double> r,
               std::vector<double>& z) {
  const size_t m = r.size();
  for (size_t k = 0; k < m; ++k) {
    size_t piv = k;
    for (size_t i = k + 1; i < m; ++i)
      if (std::fabs(G[i][k]) > std::fabs(G[piv][k])) piv = i;
    if (std::fabs(G[piv][k]) < 1e-14) return false;
    std::swap(G[piv], G[k]);
    std::swap(r[piv], r[k]);
    for (size_t i = k + 1; i < m; ++i) {
      double f = G[i][k] / G[k][k];
      for (size_t j = k; j < m; ++j) G[i][j] -= f * G[k][j];
      r[i] -= f * r[k];
    }
  }
  z.assign(m, 0.0);
  for (size_t i = m; i-- > 0;) {
    double s = r[i];
    for (size_t j = i + 1; j < m; ++j) s -= G[i][j] * z[j];
    z[i] = s / G[i][i];
  }
  return true;
}

// Unconstrained least squares restricted to the columns in `active`.
bool ls_on_active(const std::vector<Vec>& cols, const Vec& b,
                  const std::vector<int>& active, std::vector<double>& z) {
  const size_t m = active.size();
  std::vector<std::vector<double>> G(m, std::vector<double>(m, 0.0));
  std::vector<double> r(m, 0.0);
  for (size_t i = 0; i < m; ++i) {
    const Vec& ai = cols[static_cast<size_t>(active[i])];
    r[i] = ai.dot(b);
    for (size_t j = i; j < m; ++j) {
      G[i][j] = ai.dot(cols[static_cast<size_t>(active[j])]);
      G[j][i] = G[i][j];
    }
  }
  return solve_spd(std::move(G), std::move(r), z);
}

}  // namespace

NnlsResult nnls(const std::vector<Vec>& cols, const Vec& b) {
  const size_t n = cols.size();
  std::vector<double> x(n, 0.0);
  std::vector<int> active;
  std::vector<char> in_active(n, 0);

  auto assemble = [&](NnlsResult& out) {
    out.weights = x;
    out.projection = Vec::zero(b.dim);
    for (size_t i = 0; i < n; ++i)
      if (x[i] != 0.0) out.projection = out.projection + cols[i] * x[i];
    out.residual = b - out.projection;
    out.distance = out.residual.norm();
  };

  double scale = std::max(1.0, b.norm());
  const double w_tol = 1e-12 * scale;
  const size_t max_outer = 4 * n + 64;

  NnlsResult out;
  for (size_t outer = 0; outer < max_outer; ++outer) {
    assemble(out);
    // gradient of 0.5|Ax-b|^2 is -A^T residual; pick the most improving column
    int best = -1;
    double best_w = w_tol;
    for (size_t i = 0; i < n; ++i) {
      if (in_active[i]) continue;
      double w = cols[i].dot(out.residual);
      if (w > best_w) {
        best_w = w;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    active.push_back(best);
    in_active[static_cast<size_t>(best)] = 1;

    for (size_t inner = 0; inner < max_outer; ++inner) {
      std::vector<double> z;
      if (!ls_on_active(cols, b, active, z)) {
        // dependent column; discard the most recent addition
        in_active[static_cast<size_t>(active.back())] = 0;
        x[static_cast<size_t>(active.back())] = 0.0;
        active.pop_back();
        break;
      }
      double zmin = 1e300;
      for (double zi : z) zmin = std::min(zmin, zi);
      if (zmin > 0.0) {
        for (size_t i = 0; i < active.size(); ++i)
          x[static_cast<size_t>(active[i])] = z[i];
        break;
      }
      // step toward z until the first coordinate hits zero, then drop it
      double alpha = 1.0;
      for (size_t i = 0; i < active.size(); ++i) {
        double xi = x[static_cast<size_t>(active[i])];
        if (z[i] <= 0.0 && xi - z[i] > 0.0)
          alpha = std::min(alpha, xi / (xi - z[i]));
      }
      for (size_t i = 0; i < active.size(); ++i) {
        size_t idx = static_cast<size_t>(active[i]);
        x[idx] += alpha * (z[i] - x[idx]);
      }
      std::vector<int> kept;
      for (int idx : active) {
        if (x[static_cast<size_t>(idx)] <= 1e-15) {
          x[static_cast<size_t>(idx)] = 0.0;
          in_active[static_cast<size_t>(idx)] = 0;
        } else {
          kept.push_back(idx);
        }
      }
      active = std::move(kept);
      if (active.empty()) break;
    }
  }
  assemble(out);
  return out;
}

NnlsResult cone_project(const std::vector<Vec>& generators, const Vec& x) {
  return nnls(generators, x);
}

bool cone_contains(const std::vector<Vec>& generators, const Vec& x,
                   double tol) {
  return cone_project(generators, x).distance <= tol * (1.0 + x.norm());
}

namespace {

Vec lift(const Vec& v) {
  Vec w = Vec::zero(v.dim + 1);
  for (int i = 0; i < v.dim; ++i) w[i] = v[i];
  w[v.dim] = 1.0;
  return w;
}

}  // namespace

bool convex_hull_contains(const std::vector<Vec>& points, const Vec& x,
                          double tol) {
  std::vector<Vec> cols;
  cols.reserve(points.size());
  for (const Vec& p : points) cols.push_back(lift(p));
  return nnls(cols, lift(x)).distance <= tol * (1.0 + x.norm());
}

std::optional<Separation> separate_origin(const std::vector<Vec>& points,
                                          double feas_tol) {
  if (points.empty()) throw DomainError("separate_origin: empty point set");
  const int d = points.front().dim;
  std::vector<Vec> cols;
  cols.reserve(points.size());
  for (const Vec& p : points) cols.push_back(lift(p));
  NnlsResult r = nnls(cols, Vec::axis(d + 1, d));
  if (r.distance <= feas_tol) return std::nullopt;
  // The residual separates: (p_i,1).r <= 0 for all i while (0,1).r = |r|^2,
  // so the spatial part of r has negative dot with every point.
  Vec u = Vec::zero(d);
  for (int i = 0; i < d; ++i) u[i] = r.residual[i];
  double un = u.norm();
  if (un <= 0.0) return std::nullopt;  // cannot happen for a true separation
  u = u * (1.0 / un);
  double margin = -1e300;
  for (const Vec& p : points) margin = std::max(margin, u.dot(p));
  if (margin >= 0.0) return std::nullopt;  // numerically inconclusive
  return Separation{u, margin};
}

std::vector<double> origin_combination(const std::vector<Vec>& points,
                                       double feas_tol) {
  const int d = points.front().dim;
  std::vector<Vec> cols;
  cols.reserve(points.size());
  for (const Vec& p : points) cols.push_back(lift(p));
  NnlsResult r = nnls(cols, Vec::axis(d + 1, d));
  if (r.distance > feas_tol)
    throw DomainError("origin_combination: origin is separated from the hull");
  double s = 0.0;
  for (double w : r.weights) s += w;
  if (s <= 0.0) throw DomainError("origin_combination: degenerate weights");
  for (double& w : r.weights) w /= s;
  return r.weights;
}

}  // namespace wulffkit
