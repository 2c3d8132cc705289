#ifndef VALLAB_FVAL_HPP
#define VALLAB_FVAL_HPP

#include <functional>
#include <optional>

#include "vallab/fconv.hpp"
#include "vallab/intrinsic.hpp"

namespace vallab {

// Continuous compactly supported weight as a piecewise-linear table: either a
// profile on [0, inf) or a radial function on R^n (the table read at |y|).
struct DensityFunc {
  enum class Kind { OnHalfline, OnRn };
  Kind kind = Kind::OnHalfline;
  int dim = 0;  // ambient dimension for OnRn
  std::vector<double> breaks;  // strictly increasing, breaks.front() >= 0
  std::vector<double> values;  // zero outside [breaks.front(), breaks.back()]

  static DensityFunc on_halfline(std::vector<double> breaks,
                                 std::vector<double> values);
  static DensityFunc radial(int dim, std::vector<double> breaks,
                            std::vector<double> values);

  double eval1(double t) const;
  double operator()(const Vector& y) const;
  double support_radius() const { return breaks.back(); }
  // Moments of the profile: integral of t^k * table(t) dt (exact).
  double moment(int k) const;
};

struct AtomicMeasure {
  std::vector<std::pair<Vector, double>> atoms;  // (point, mass >= 0)

  double total_mass() const;
};

struct FuncValuation {
  std::function<double(const PolyhedralFunc&)> evaluate;
  bool epi_translation_invariant = false;
  std::optional<int> degree;

  double operator()(const PolyhedralFunc& u) const { return evaluate(u); }
};

// e^{-min u}; the minimum of a coercive polyhedral function sits on a vertex.
double exp_min(const PolyhedralFunc& u);

// Layer-cake integral of e^{-u}: per-interval polynomial sublevel volumes
// integrated against e^{-t} in closed form, adaptive Simpson as a fallback.
double exp_integral(const PolyhedralFunc& u);

// Gradient valuation: finite sum zeta(slope_i) * V_n(cell_i) over
// full-dimensional cells. Unbounded cells are admissible only where zeta
// vanishes on their slope.
double grad_valuation(const PolyhedralFunc& u, const DensityFunc& zeta);

// Monge-Ampere measure of a planar or 1-D max-affine function: atoms at the
// subdivision vertices with subdifferential volumes as masses.
AtomicMeasure monge_ampere(const MaxAffineFunc& v);

double integrate(const AtomicMeasure& m, const DensityFunc& zeta);

struct EpiHomogComponents {
  std::vector<double> components;  // Z_0(u) .. Z_n(u)
  bool polynomial = true;          // reconstruction probe at lambda = n + 1
  double probe_residual = 0.0;
};

// Inverse-Vandermonde extraction from Z(j ◻ u), j = 0..n; the components sum
// to Z(u) by construction.
EpiHomogComponents epi_homog_components(const FuncValuation& z,
                                        const PolyhedralFunc& u, int n);

// Radial convex function phi(|x|) with increasing derivative handle.
struct RadialFunc {
  std::function<double(double)> phi;
  std::function<double(double)> phi_prime;
  // When phi'(s) = quad_coef * s the quadrature is replaced by exact moments.
  bool quadratic = false;
  double quad_coef = 1.0;
};

// Z_{n,alpha}(u ◻ ind_{rB}) for radial u.
double znalpha_radial(int n, const RadialFunc& u, const DensityFunc& alpha,
                      double r);

struct FunctionalIntrinsic {
  std::vector<double> z;  // Z_{0,alpha}(u) .. Z_{n,alpha}(u)
  double fit_residual = 0.0;
};

// Functional intrinsic volumes via the Steiner-type polynomial fit in r.
// Indicator route: exact through the classical Steiner polynomial.
FunctionalIntrinsic functional_intrinsic(const Polytope& body,
                                         const DensityFunc& alpha,
                                         const std::vector<double>& r_nodes);
FunctionalIntrinsic functional_intrinsic_radial(int n, const RadialFunc& u,
                                                const DensityFunc& alpha,
                                                const std::vector<double>& r_nodes);

// Max residual of |Z(u + t) - e^{-t} Z(u)| over the shifts.
double vertical_shift_check(const FuncValuation& z, const PolyhedralFunc& u,
                            const std::vector<double>& t_values);

// Valuation identity residual |Z(u) + Z(v) - Z(u ∨ v) - Z(u ∧ v)|.
double function_valuation_check(const FuncValuation& z, const FuncSplitPair& pair);
// Assembles the lattice pair from two functions whose domains meet in a
// lower-dimensional set (split pairs); rejects non-convex minima.
double function_valuation_check(const FuncValuation& z, const PolyhedralFunc& u,
                                const PolyhedralFunc& v);

}  // namespace vallab

#endif  // VALLAB_FVAL_HPP
