#ifndef VALLAB_INTRINSIC_HPP
#define VALLAB_INTRINSIC_HPP

#include <functional>
#include <string>
#include <vector>

#include "vallab/polytope.hpp"

namespace vallab {

// V_0, ..., V_n with V_j in units length^j. V_0 = 1 for nonempty bodies,
// V_n = volume.
struct IntrinsicVector {
  int dim = 0;
  std::vector<double> values;

  double operator[](int j) const { return values[static_cast<size_t>(j)]; }
};

// Opaque valuation handle with caller-asserted flags; the flags are what the
// harness checks, never what it assumes.
struct BodyValuation {
  std::function<double(const Polytope&)> evaluate;
  bool translation_invariant = false;
  bool simple = false;
  bool continuous = false;

  double operator()(const Polytope& p) const {
    if (p.is_empty()) return 0.0;  // Z(empty) = 0 convention
    return evaluate(p);
  }
};

struct DecompositionPiece {
  Polytope body;
  long long multiplicity = 1;
  std::string label;
};

// Intrinsic volumes. General polytopes for n <= 3; boxes and simplices for
// n <= 6 (simplex external angles of codimension >= 4 are estimated by a
// seeded Gaussian sampler; everything else is closed-form).
IntrinsicVector intrinsic_volumes(const Polytope& p);

// Steiner polynomial sum_j r^{n-j} kappa_{n-j} V_j(P).
double steiner_volume(const Polytope& p, double r);

// Homogeneous components of a translation invariant valuation via the
// Vandermonde system on Z(mP), m = 1..n. Returns [Z_0, Z_1, ..., Z_n] with
// Z_0 = Z({0}).
std::vector<double> homogeneous_components(const BodyValuation& z,
                                           const Polytope& p);

// Hadwiger canonical simplex decomposition: n+1 pieces
// Q_k(t) = (1-t) S_k + t S̄_{n-k}.
std::vector<DecompositionPiece> canonical_simplex_decomposition(
    const Polytope& simplex, double t);

// Dissection of mS into l-cylinder pieces along increasing index chains;
// each signature carries multiplicity C(m, l) symbolically.
std::vector<DecompositionPiece> cylinder_decomposition(const Polytope& simplex,
                                                       int m);

// Surface-area-measure valuation: sum over facets of zeta(outer normal)
// times the facet's (n-1)-measure. Needs the H-representation.
double facet_valuation(const Polytope& p,
                       const std::function<double(const Vector&)>& zeta);

struct KinematicEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  long long samples = 0;
  // Running estimate at chunk boundaries (for convergence traces).
  std::vector<std::pair<long long, double>> trace;
};

// Monte-Carlo estimate of the principal kinematic integral
// \int V_0(K ∩ φL) dφ in the plane; deterministic for a fixed seed.
KinematicEstimate kinematic_integral_mc(const Polytope& k, const Polytope& l,
                                        long long samples, uint64_t seed);

// Closed-form target sum_i kappa_i kappa_{n-i} / (C(n,i) kappa_n) V_i V_{n-i}.
double kinematic_target(const Polytope& k, const Polytope& l);

// Valuation residual |Z(P+) + Z(P-) - Z(P) - Z(P ∩ h)| on a hyperplane split.
double valuation_check(const BodyValuation& z, const Polytope& p,
                       const Hyperplane& h);

double binomial(int n, int k);

}  // namespace vallab

#endif  // VALLAB_INTRINSIC_HPP
