#ifndef VALLAB_FCONV_HPP
#define VALLAB_FCONV_HPP

#include <optional>
#include <utility>
#include <vector>

#include "vallab/polytope.hpp"

namespace vallab {

// One affine piece <slope, x> + offset of a polyhedral convex function,
// restricted to base ⊕ cone(rays). Bounded cells have no rays. Conical cells
// are single-apex: base is a point; in R^3 they arise only from gauges, where
// each ray r satisfies <slope, r> = 1 (used by the membership test).
struct PolyCell {
  Polytope base;
  std::vector<Vector> rays;
  Vector slope;
  double offset = 0.0;

  bool bounded() const { return rays.empty(); }
  bool contains(const Vector& x, double tol = kEps) const;
  double value(const Vector& x) const { return dot(slope, x) + offset; }
};

// Min-of-affine-over-cells representation (the primal form): +inf outside
// the union of cells.
struct PolyhedralFunc {
  int dim = 0;
  std::vector<PolyCell> cells;

  double operator()(const Vector& x) const;
  bool all_bounded() const;
  double min_value() const;
  Vector argmin() const;
  PolyhedralFunc shifted(double t) const;             // u + t
  PolyhedralFunc translated(const Vector& x0) const;  // x -> u(x - x0)
  // Distinct (vertex/apex, value) pairs over all cells.
  std::vector<std::pair<Vector, double>> vertex_values() const;
};

// Max-of-affine representation (the dual form), finite everywhere.
struct MaxAffineFunc {
  int dim = 0;
  std::vector<std::pair<Vector, double>> pieces;  // (slope, offset)

  double operator()(const Vector& x) const;
  // Canonical form: keep only pieces active on a region with nonempty
  // interior (vertices of the lifted lower hull).
  MaxAffineFunc pruned() const;
};

double evaluate(const PolyhedralFunc& u, const Vector& x);
double evaluate(const MaxAffineFunc& v, const Vector& x);

PolyhedralFunc indicator(const Polytope& k);
PolyhedralFunc linear_plus_indicator(const Vector& y, const Polytope& k);
// Gauge (Minkowski functional) of a body containing the origin; cells are
// cones over the facets.
PolyhedralFunc gauge(const Polytope& k);

// Sublevel set {u <= t}; EmptyBody below the minimum.
Polytope sublevel(const PolyhedralFunc& u, double t);

// Legendre transforms. PolyhedralFunc -> MaxAffineFunc needs a compact
// domain (vertex enumeration); MaxAffineFunc -> PolyhedralFunc builds the
// regular subdivision from the lifted lower hull (n <= 2). The conical case
// (positively homogeneous plus constant, e.g. gauges) conjugates to an
// indicator-type function and is exposed separately.
MaxAffineFunc conjugate(const PolyhedralFunc& u);
PolyhedralFunc conjugate(const MaxAffineFunc& v);
PolyhedralFunc conjugate_conical(const PolyhedralFunc& u);

// Max over sampled points of |u** - u| (certifies convexity of the cell
// patchwork; conjugation is an involution exactly on convex inputs).
double involution_residual(const PolyhedralFunc& u, int samples, uint64_t seed);

// Infimal convolution via (u* + v*)*; both arguments need compact domains.
PolyhedralFunc inf_conv(const PolyhedralFunc& u, const PolyhedralFunc& v);

// Epi-scaling lambda (x -> lambda u(x/lambda), 0 -> ind_{0}) and horizontal
// scaling (x -> u(x/lambda)).
PolyhedralFunc epi_scale(double lambda, const PolyhedralFunc& u);
PolyhedralFunc horizontal_scale(double lambda, const PolyhedralFunc& u);

struct CoercivityWitness {
  double a = 0.0;
  double b = 0.0;
};

// Valid linear minorant u(x) >= a|x| + b with a > 0, certified on every
// vertex and recession generator.
CoercivityWitness coercivity_witness(const PolyhedralFunc& u);

// Per-level Hausdorff distances of sublevel sets along a sequence; levels
// within 1e-9 of min(u) are skipped (reported as NaN).
std::vector<std::vector<double>> epi_convergence_diag(
    const std::vector<PolyhedralFunc>& seq, const PolyhedralFunc& u,
    const std::vector<double>& levels);

// Valuation test pair from a domain split: u = w on H+, v = w on H-,
// u ∨ v = w on the section, u ∧ v = w.
struct FuncSplitPair {
  PolyhedralFunc u, v, vee, wedge;
};

FuncSplitPair split_function(const PolyhedralFunc& w, const Hyperplane& h);

}  // namespace vallab

#endif  // VALLAB_FCONV_HPP
