#pragma once

#include <complex>
#include <vector>

#include "hypertile/tiling.hpp"
#include "hypertile/vertex_type.hpp"

namespace hypertile {

/// Point of the Poincare unit disk.
using HPoint = std::complex<double>;

/// Interior angle of the regular hyperbolic k-gon with side l:
/// 2 asin(cos(pi/k) / cosh(l/2)).
double interior_angle(int k, double l);

/// Sum of interior angles of the polygons of k with common side l.
double total_angle(const VertexType& k, double l);

struct GeomParams {
  double side_length = 0.0;
  double tolerance = 1e-12;
  double residual = 0.0;  // total_angle(side_length) - 2 pi
  int iterations = 0;
};

/// Side length at which the polygons of k close up around a vertex.
/// Bisection on a doubling bracket starting at 1e-6, at most 200 steps.
/// Throws PreconditionError when the angle-sum is not > 2.
GeomParams side_length(const VertexType& k, double tol = 1e-12);

double hyperbolic_distance(HPoint z, HPoint w);

/// Disk automorphism z -> (a z + b) / (c z + d), applied after complex
/// conjugation when `reflects()`.
class Isometry {
 public:
  Isometry() = default;

  static Isometry rotation(double theta);
  /// Maps 0 to z.
  static Isometry translation(HPoint z);
  /// Orientation-preserving map sending p to 0 and q onto the positive real axis.
  static Isometry normalize(HPoint p, HPoint q);
  static Isometry conjugation();

  HPoint apply(HPoint z) const;
  HPoint operator()(HPoint z) const { return apply(z); }
  Isometry operator*(const Isometry& g) const;  // (*this)(g(z))
  Isometry inverse() const;
  bool reflects() const { return conj_; }
  std::complex<double> determinant() const { return a_ * d_ - b_ * c_; }

 private:
  Isometry(std::complex<double> a, std::complex<double> b, std::complex<double> c,
           std::complex<double> d, bool conj);

  std::complex<double> a_{1.0}, b_{0.0}, c_{0.0}, d_{1.0};
  bool conj_ = false;
};

struct Realization {
  std::vector<HPoint> coords;  // per vertex
  GeomParams params;
  int seed_face = 0;
  double max_misfit = 0.0;  // largest disagreement at vertices placed twice
};

/// Places every face as a regular polygon of the given side length,
/// breadth-first from `seed_face`, whose first corner goes to the origin.
/// Throws InternalError when the closure misfit exceeds 1e-3.
Realization realize(const Tiling& t, const GeomParams& params, int seed_face = 0);

struct GeometryReport {
  double max_edge_error = 0.0;        // |d(u,w) - l0| over edges
  double max_angle_error = 0.0;       // |angle sum - 2 pi| over interior vertices
  double max_boundary_angle = 0.0;    // largest angle sum at a boundary vertex
  double max_misfit = 0.0;
  int worst_edge = kNone;             // dart id
  int worst_vertex = kNone;

  bool passed(double edge_tol = 1e-8, double angle_tol = 1e-6, double misfit_tol = 1e-6) const;
};

/// Recomputes edge lengths and angle sums from the coordinates alone.
GeometryReport geometric_checks(const Tiling& t, const Realization& r);

}  // namespace hypertile
