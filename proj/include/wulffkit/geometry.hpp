// wulffkit: shared geometric vocabulary. Vectors in dimension 2..4, unit
// directions, polar-plot points, the inversion map, and the tolerance policy
// threaded through every predicate in the library.
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wulffkit {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Errors

/// Precondition or numeric-domain violation (CLI exit code 3).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input whose affine rank is too small for the requested construction.
struct DegenerateInputError : DomainError {
  int rank;  // affine rank actually achieved
  DegenerateInputError(const std::string& msg, int achieved_rank)
      : DomainError(msg), rank(achieved_rank) {}
};

// ---------------------------------------------------------------------------
// Vec

/// Dense vector of dimension 2..5 (5 only for homogenized solver internals).
/// Immutable by convention: operations return new values.
struct Vec {
  std::array<double, 5> c{0.0, 0.0, 0.0, 0.0, 0.0};
  int dim = 0;

  Vec() = default;
  Vec(double x, double y) : c{x, y, 0.0, 0.0, 0.0}, dim(2) {}
  Vec(double x, double y, double z) : c{x, y, z, 0.0, 0.0}, dim(3) {}
  Vec(double x, double y, double z, double w) : c{x, y, z, w, 0.0}, dim(4) {}

  static Vec zero(int d) {
    if (d < 0 || d > 5) throw DomainError("Vec supports dimensions up to 5");
    Vec v;
    v.dim = d;
    return v;
  }
  static Vec axis(int d, int i) {
    Vec v = zero(d);
    v.c[static_cast<size_t>(i)] = 1.0;
    return v;
  }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  Vec operator+(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] += o[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] -= o[i];
    return r;
  }
  Vec operator*(double s) const {
    Vec r = *this;
    for (int i = 0; i < dim; ++i) r.c[static_cast<size_t>(i)] *= s;
    return r;
  }
  Vec operator-() const { return *this * -1.0; }

  double dot(const Vec& o) const {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += c[static_cast<size_t>(i)] * o[i];
    return s;
  }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }

  Vec normalized() const {
    double n = norm();
    if (n <= 0.0) throw DomainError("cannot normalize a zero vector");
    return *this * (1.0 / n);
  }

  /// Cross product; dim 3 only.
  Vec cross(const Vec& o) const {
    return Vec(c[1] * o[2] - c[2] * o[1], c[2] * o[0] - c[0] * o[2],
               c[0] * o[1] - c[1] * o[0]);
  }

  bool lex_less(const Vec& o) const {
    for (int i = 0; i < dim; ++i) {
      if (c[static_cast<size_t>(i)] < o[i]) return true;
      if (c[static_cast<size_t>(i)] > o[i]) return false;
    }
    return false;
  }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline double distance(const Vec& a, const Vec& b) { return (a - b).norm(); }

// ---------------------------------------------------------------------------
// Tolerance policy

/// Explicit tolerances; every geometric predicate takes one of these.
/// abs_tol: pointwise comparisons; hull_tol: vertex snapping and facet
/// coplanarity; report_tol: bands used when comparing bodies and fields.
struct Tolerance {
  double abs_tol = 1e-9;
  double hull_tol = 1e-9;
  double report_tol = 1e-6;

  void validate() const {
    if (!(abs_tol > 0.0) || !(hull_tol > 0.0) || !(report_tol > 0.0))
      throw DomainError("tolerances must be strictly positive");
    if (abs_tol > report_tol)
      throw DomainError("abs_tol must not exceed report_tol");
  }
};

// ---------------------------------------------------------------------------
// UnitVector / PolarPoint

/// Direction on S^{d-1}, d in {2,3,4}. Construction normalizes; the stored
/// norm is within 1e-12 of one.
struct UnitVector {
  Vec v;

  UnitVector() = default;
  explicit UnitVector(const Vec& raw) : v(raw.normalized()) {}

  static UnitVector from_angle(double a) {
    UnitVector u;
    u.v = Vec(std::cos(a), std::sin(a));
    return u;
  }

  int dim() const { return v.dim; }
  double operator[](int i) const { return v[i]; }
  double dot(const UnitVector& o) const { return v.dot(o.v); }
  double dot(const Vec& o) const { return v.dot(o); }
  UnitVector operator-() const {
    UnitVector u;
    u.v = -v;
    return u;
  }
  /// Angle in [0, 2pi); dim 2 only.
  double angle() const {
    double a = std::atan2(v[1], v[0]);
    return a < 0.0 ? a + 2.0 * kPi : a;
  }
};

/// Point of punctured space in polar-plot form: radius * direction, never the
/// origin.
struct PolarPoint {
  UnitVector direction;
  double radius = 1.0;

  PolarPoint() = default;
  PolarPoint(const UnitVector& dir, double r) : direction(dir), radius(r) {
    if (!(r > 0.0)) throw DomainError("polar radius must be positive");
  }

  Vec cartesian() const { return direction.v * radius; }
};

/// inv(theta, r) = (-theta, 1/r). Involution on all valid polar points.
inline PolarPoint invert(const PolarPoint& p) {
  return PolarPoint(-p.direction, 1.0 / p.radius);
}

inline Vec polar_to_cartesian(const PolarPoint& p) { return p.cartesian(); }

inline PolarPoint cartesian_to_polar(const Vec& x,
                                     const Tolerance& tol = Tolerance{}) {
  double n = x.norm();
  if (n <= tol.abs_tol)
    throw DomainError("origin has no polar form");
  UnitVector u;
  u.v = x * (1.0 / n);
  return PolarPoint(u, n);
}

// ---------------------------------------------------------------------------
// Deterministic RNG. splitmix64 stream; bit-stable across platforms, unlike
// the std:: distributions.

struct SplitMix64 {
  uint64_t state = 0x9e3779b97f4a7c15ULL;

  explicit SplitMix64(uint64_t seed = 0x9e3779b97f4a7c15ULL) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return std::ldexp(static_cast<double>(next() >> 11), -53); }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  size_t index(size_t n) { return static_cast<size_t>(next() % n); }

  /// Uniform direction on S^{d-1} by rejection from the cube.
  Vec unit(int d) {
    for (;;) {
      Vec v = Vec::zero(d);
      for (int i = 0; i < d; ++i) v[i] = uniform(-1.0, 1.0);
      double s2 = v.norm2();
      if (s2 >= 0.04 && s2 <= 1.0) return v * (1.0 / std::sqrt(s2));
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& xs) {
    for (size_t i = xs.size(); i > 1; --i) {
      size_t j = index(i);
      std::swap(xs[i - 1], xs[j]);
    }
  }
};

}  // namespace wulffkit
