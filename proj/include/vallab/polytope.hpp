#ifndef VALLAB_POLYTOPE_HPP
#define VALLAB_POLYTOPE_HPP

#include <array>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "vallab/core.hpp"

namespace vallab {

// One facet of the H-representation. `vertices` indexes the polytope's
// canonical vertex list; for n == 3 the cycle is ordered counterclockwise
// seen from outside. `witness` holds three points spanning the facet plane
// exactly as stored doubles; splits propagate it unchanged so that pieces of
// one body agree bit-for-bit on shared planes (the Dehn pipeline recomputes
// normals from witnesses in extended precision).
struct Facet {
  Hyperplane plane;
  std::vector<int> vertices;
  std::array<Vector, 3> witness;
  bool witness_flipped = false;  // outward normal is -cross of witness edges
};

struct SplitResult;

// Convex polytope in V-representation with optional H-representation
// (populated for full-dimensional bodies with n <= 3). The empty body is a
// first-class value: no vertices, volume 0.
class Polytope {
 public:
  Polytope() = default;

  static Polytope empty(int dim);
  static Polytope point(const Vector& x);
  static Polytope segment(const Vector& a, const Vector& b);
  static Polytope box(const std::vector<double>& lo,
                      const std::vector<double>& hi);
  static Polytope cube(int dim, double side, double origin = 0.0);
  static Polytope simplex(const std::vector<Vector>& vertices);
  static Polytope standard_simplex(int dim, double scale = 1.0);
  static Polytope regular_polygon(int k, double radius,
                                  double phase = 0.0);
  // Regular tetrahedron with the given edge length, built by scaling the
  // integer-coordinate model {0,e1+e2,e1+e3,e2+e3} (edge sqrt(2)); dihedral
  // angle data stays exact in extended precision.
  static Polytope regular_tetrahedron(double edge);
  // Inscribed polytopal unit-ball approximation: k-gon in the plane, or a
  // subdivided icosahedron in R^3 (`resolution` = subdivision level).
  static Polytope ball_approx(int dim, int resolution, double radius = 1.0);

  bool is_empty() const { return verts_.empty(); }
  int dim() const { return dim_; }
  const std::vector<Vector>& vertices() const { return verts_; }
  bool has_facets() const { return !facets_.empty(); }
  const std::vector<Facet>& facets() const { return facets_; }

  // Affine dimension of the vertex set (0 for a point), -1 when empty.
  int affine_dim() const;

  Polytope translate(const Vector& t) const;
  Polytope scale(double s) const;
  Polytope transform(const Mat& m) const;

  bool contains(const Vector& x, double tol = kEps) const;
  double circumradius() const;  // max |v| over vertices (about the origin)

  // Edges as index pairs; requires the H-representation for n == 3.
  std::vector<std::pair<int, int>> edges() const;

 private:
  friend Polytope hull(const std::vector<Vector>& points);
  friend SplitResult split_by_hyperplane(const Polytope&, const Hyperplane&);
  int dim_ = 0;
  std::vector<Vector> verts_;
  std::vector<Facet> facets_;
};

// Convex hull with canonical output. Exact for n <= 3; in higher dimensions
// only recognized families (boxes, simplices) are accepted.
Polytope hull(const std::vector<Vector>& points);

// Lebesgue measure V_n. Exact for n <= 3 (fan triangulation) and for
// box/simplex inputs in any n. Zero for lower-dimensional bodies.
double volume(const Polytope& p);

// h_P(y) = max over vertices of <v, y>.
double support(const Polytope& p, const Vector& y);

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

struct SplitResult {
  Polytope plus;     // P intersected with {<n,x> >= c}
  Polytope minus;    // P intersected with {<n,x> <= c}
  Polytope section;  // P intersected with the hyperplane itself
};

SplitResult split_by_hyperplane(const Polytope& p, const Hyperplane& h);

// Support-function based distance: sup over a deterministic direction set of
// |h_A - h_B|. Exact on polytope pairs up to the direction sampling.
double hausdorff_distance(const Polytope& a, const Polytope& b);

// A convex body sampled through its support function on a fixed direction
// grid. Bodies built from a polytope keep an exact evaluator (the rotation
// mixture accumulated by rotational means); bodies built from raw tables
// reconstruct a polygon via halfspace intersection (n == 2 only).
class SampledBody {
 public:
  SampledBody() = default;
  static SampledBody from_polytope(const Polytope& p,
                                   const std::vector<Vector>& directions);
  static SampledBody from_table(std::vector<Vector> directions,
                                std::vector<double> values);

  static std::vector<Vector> uniform_directions2(int k);

  int dim() const { return dirs_.empty() ? 0 : dirs_[0].dim(); }
  const std::vector<Vector>& directions() const { return dirs_; }
  const std::vector<double>& values() const { return vals_; }

  // Exact support evaluation through the base body and rotation mixture.
  double support(const Vector& y) const;

  friend SampledBody rotational_mean(const SampledBody& k,
                                     const std::vector<Mat>& rotations);
  friend double hausdorff_distance(const SampledBody& a, const SampledBody& b);

 private:
  std::vector<Vector> dirs_;
  std::vector<double> vals_;
  std::shared_ptr<const Polytope> base_;
  std::vector<Mat> mix_;  // uniform mixture of rotations applied to base
  void refresh_values();
};

// Support mean over rotated copies: h_M = (1/m) sum_i h_{R_i K}.
SampledBody rotational_mean(const SampledBody& k,
                            const std::vector<Mat>& rotations);

double hausdorff_distance(const SampledBody& a, const SampledBody& b);

}  // namespace vallab

#endif  // VALLAB_POLYTOPE_HPP
