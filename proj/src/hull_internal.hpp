// Internal helpers shared by the hull engines.
#pragma once

#include <vector>

#include "wulffkit/polytope.hpp"

namespace wulffkit::detail {

/// Lexicographic sort + window scan dedupe; keeps first representative of
/// each cluster of points within `tol` of one another.
std::vector<Vec> dedupe_points(const std::vector<Vec>& points, double tol);

Polytope hull2d(const std::vector<Vec>& points, const Tolerance& tol);
Polytope hull3d(const std::vector<Vec>& points, const Tolerance& tol);

}  // namespace wulffkit::detail
