// Non-negative least squares (Lawson-Hanson active set) over small ambient
// dimensions. Powers the cone/convex-hull membership oracles: projection onto
// a finitely generated cone, separation certificates, and hemisphericity
// witnesses are all instances of min |A*lambda - b| subject to lambda >= 0.
#pragma once

#include <optional>
#include <vector>

#include "wulffkit/geometry.hpp"

namespace wulffkit {

struct NnlsResult {
  std::vector<double> weights;  // nonnegative, one per column
  Vec projection;               // A * weights
  Vec residual;                 // b - A * weights
  double distance = 0.0;        // |residual|
};

/// min_{lambda >= 0} | sum_i lambda_i * cols[i] - b |.
NnlsResult nnls(const std::vector<Vec>& cols, const Vec& b);

/// Nearest point of cone(generators) to x, with weights.
NnlsResult cone_project(const std::vector<Vec>& generators, const Vec& x);

/// x in cone(generators) up to `tol` Euclidean distance.
bool cone_contains(const std::vector<Vec>& generators, const Vec& x,
                   double tol);

/// x in conv(points) up to `tol`, decided on the homogenized cone
/// {(p_i, 1)} vs (x, 1).
bool convex_hull_contains(const std::vector<Vec>& points, const Vec& x,
                          double tol);

/// Separation of the origin from conv(points). Returns a unit direction u
/// with u . p < 0 for every point when one exists, together with the margin
/// max_i u . p_i; otherwise nullopt (the origin lies in the hull).
struct Separation {
  Vec direction;
  double margin;  // max_i direction . p_i, strictly negative
};
std::optional<Separation> separate_origin(const std::vector<Vec>& points,
                                          double feas_tol);

/// Convex combination of `points` equal to the origin within feas_tol, when
/// separate_origin fails. Weights sum to one.
std::vector<double> origin_combination(const std::vector<Vec>& points,
                                       double feas_tol);

}  // namespace wulffkit
