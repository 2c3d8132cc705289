#ifndef VALLAB_AFFINE_HPP
#define VALLAB_AFFINE_HPP

#include <functional>
#include <vector>

#include "vallab/core.hpp"

namespace vallab {

// Planar convex body with smooth support function h(theta) given by closed
// form handles (h, h', h''). Strict convexity means h + h'' > 0. Bodies
// produced by an SL(2) map lose the support handles but keep exact boundary
// point / tangent direction handles, which is all the subdivision scheme
// needs.
class SmoothBody2 {
 public:
  static SmoothBody2 circle(double r);
  static SmoothBody2 ellipse(double a, double b);
  // h(theta) = c0 + sum_k (a_k cos(k theta) + b_k sin(k theta)), k >= 2.
  static SmoothBody2 fourier(double c0, const std::vector<double>& cos_coef,
                             const std::vector<double>& sin_coef);
  // Near-polygon: curvature radius h + h'' = delta (1 - cos 4 theta)/2,
  // flat up to scale delta except at four corner parameters.
  static SmoothBody2 polygon_like(double delta);

  bool has_support() const { return static_cast<bool>(h_); }
  bool origin_interior() const { return origin_interior_; }
  double h(double theta) const;
  double hp(double theta) const;
  double hpp(double theta) const;
  double curvature_radius(double theta) const { return h(theta) + hpp(theta); }

  Vector boundary_point(double theta) const;
  Vector tangent_dir(double theta) const;

  // Support triangle area over [t1, t2]. With support handles available this
  // uses the product form I+ * I- / (2 sin dt) with I± = ∫ g sin(...) dt,
  // whose factors are all positive -- no cancellation, full relative accuracy
  // even for areas near the rounding floor. Without handles it falls back to
  // the tangent-intersection geometry.
  double triangle_area(double t1, double t2) const;

  // Equi-affine image: boundary points and tangents transform exactly; the
  // support handles are dropped.
  SmoothBody2 sl2_image(const Mat& phi) const;

 private:
  std::function<double(double)> h_, hp_, hpp_;
  std::function<Vector(double)> point_, tangent_;
  bool origin_interior_ = true;
};

struct SupportTriangle {
  Vector x, y, apex;
  double area = 0.0;
};

// Triangle bounded by the tangent lines at parameters t1, t2 and the chord.
SupportTriangle support_triangle(const SmoothBody2& k, double t1, double t2);

struct SubdivisionResult {
  double estimate = 0.0;
  std::vector<double> trace;  // per-level estimates, nonincreasing
};

// Blaschke's scheme: level l uses 4 * 2^l support triangles on the dyadic
// parameter grid; sum of cbrt(8 * area) decreases under refinement.
SubdivisionResult affine_length_subdivision(const SmoothBody2& k, int depth);

// Quadrature of the affine length integral (h + h'')^{2/3} d theta by the
// periodic trapezoid rule.
double affine_surface_area_smooth(const SmoothBody2& k, int nodes);

// Orlicz variant: integral of zeta(kappa_0) against the cone measure,
// kappa_0 = kappa / <x,n>^3 and dV = <x,n> dH^1.
double orlicz_asa(const SmoothBody2& k, const std::function<double(double)>& zeta,
                  int nodes);

struct JensenCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Affine isoperimetric-type upper bound (n = 2): Omega <= (2 kappa_2)^{1/3} *
// perimeter^{2/3}, equality on discs.
JensenCheck asa_upper_bound_check(const SmoothBody2& k, int nodes = 512);

}  // namespace vallab

#endif  // VALLAB_AFFINE_HPP
