// Anisotropy fields gamma: S^n -> R_+ (n in {1,2}), the input currency of the
// Wulff construction. Presets cover the regimes the detectors care about:
// constant, ellipse/ellipsoid support, cube support, the lens (strictly
// convex shape from a non-smooth field), random positive trig polynomials,
// and support fields of explicit polytopes. Sampled tables interpolate
// linearly in angle on S^1 and barycentrically on the icosphere on S^2.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wulffkit/geometry.hpp"
#include "wulffkit/mesh.hpp"

namespace wulffkit {

class GammaField {
 public:
  enum class Kind {
    constant,
    ellipse,      // sqrt(sum a_i^2 theta_i^2)
    cube,         // sum a_i |theta_i|
    lens,         // min(1 + 0.5 cos, 1 - 0.5 cos); n = 1 only
    trig_poly,    // positive truncated Fourier / quadratic harmonic series
    poly_support, // support function of a fixed polytope
    sampled,
  };

  int n() const { return n_; }
  int ambient_dim() const { return n_ + 1; }
  Kind kind() const { return kind_; }
  const std::string& describe() const { return desc_; }

  /// Evaluate at a direction of matching dimension. Strictly positive.
  double eval(const UnitVector& theta) const;

  // --- factories -----------------------------------------------------------
  static GammaField constant(int n, double r);
  static GammaField ellipse(int n, std::vector<double> semi_axes);
  static GammaField cube_support(int n, std::vector<double> scales);
  static GammaField lens();
  /// Fourier series on S^1 / quadratic harmonics on S^2, coefficients drawn
  /// from `seed`. `convex_regular` additionally bounds second derivatives so
  /// the field is the support function of a smooth strictly convex body.
  static GammaField random_trig_poly(int n, uint64_t seed, bool convex_regular);
  static GammaField poly_support(int n, std::vector<Vec> vertices);
  /// Sampled table. For n=1 directions may be arbitrary distinct angles; for
  /// n=2 they must coincide with an icosphere vertex set.
  static GammaField sampled(int n, std::vector<UnitVector> directions,
                            std::vector<double> values,
                            const Tolerance& tol = Tolerance{});

  /// Positivity probe over a dense mesh; throws on failure. Run by factories.
  void validate(const Tolerance& tol = Tolerance{}) const;

 private:
  GammaField() = default;

  int n_ = 1;
  Kind kind_ = Kind::constant;
  std::string desc_;
  std::vector<double> params_;

  // trig_poly: params_ holds c0 then (a_k, b_k) pairs for n=1; for n=2 it is
  // c0, linear a[3], symmetric quadratic b[6] (xx, yy, zz, xy, xz, yz)
  std::vector<Vec> poly_vertices_;

  // sampled state
  std::vector<double> sample_angles_;   // n=1, sorted
  std::vector<double> sample_values_;
  std::shared_ptr<IcosphereMesh> sample_mesh_;  // n=2
};

/// Integrand values gamma_W over one direction mesh, with provenance.
struct IntegrandSamples {
  int n = 1;
  int level = 1;
  std::vector<UnitVector> directions;
  std::vector<double> values;
  std::string provenance;

  /// Reinterpret the samples as an interpolated field.
  GammaField as_field(const Tolerance& tol = Tolerance{}) const;
};

}  // namespace wulffkit
