#ifndef VALLAB_DEHN_HPP
#define VALLAB_DEHN_HPP

#include <string>
#include <utility>
#include <vector>

#include "vallab/bigfixed.hpp"
#include "vallab/polytope.hpp"

namespace vallab {

// One formal summand length ⊗ angle. Angles live in extended precision; they
// are recomputed from the facet plane witnesses, so pieces of a split body
// agree bit-for-bit on shared planes.
struct DehnTerm {
  double length = 0.0;
  BigFixed angle;
};

struct DehnSymbol {
  std::vector<DehnTerm> terms;
  int precision = 64;  // decimal digits carried by the angles

  bool empty() const { return terms.empty(); }
};

// Edge data of a full-dimensional 3-polytope: (edge length, dihedral angle).
std::vector<std::pair<double, double>> dihedral_angles(const Polytope& p);

// Canonical Dehn symbol: angles at `precision` digits, equal angles merged,
// rational multiples of pi removed (every admissible Cauchy weight vanishes
// there since zeta(pi) = 0).
DehnSymbol dehn_symbol(const Polytope& p, int precision = 64);

DehnSymbol symbol_sum(const DehnSymbol& a, const DehnSymbol& b);
DehnSymbol symbol_negate(const DehnSymbol& a);

// Term-by-term comparison with explicit tolerances (for invariance tests on
// double-precision geometry, where the exact machinery would be meaningless).
bool symbols_match(const DehnSymbol& a, const DehnSymbol& b, double angle_tol,
                   double length_tol);

struct RelationVerdict {
  enum class Kind { Equal, Distinct, Unknown };
  Kind kind = Kind::Unknown;
  // Relations applied during reduction, each over the basis [pi, angles...]
  // current at the time it was found.
  std::vector<std::vector<long long>> certificate;
  long long height_bound = 0;
  double residual_length = 0.0;  // largest surviving |length| (Distinct) or
                                 // largest cancelled remainder (Equal)
  std::string note;
};

// Semidecision for equality of Dehn symbols: reduces the difference symbol by
// integer relations among {pi, angles} with coefficient height up to
// height_bound. Equal needs every term annulled by verified relations;
// Distinct needs a certified absence of relations plus a surviving term.
RelationVerdict symbol_equal(const DehnSymbol& a, const DehnSymbol& b,
                             long long height_bound = 10000,
                             int precision = 64);

struct Hilbert3Report {
  double cube_volume = 0.0;
  double tetra_volume = 0.0;
  DehnSymbol cube_symbol;
  DehnSymbol tetra_symbol;
  RelationVerdict verdict;
};

// The Hilbert Third Problem demonstration: a cube and a regular tetrahedron
// of equal volume have distinct Dehn symbols.
Hilbert3Report hilbert3_report(double volume_tol = 1e-12);

}  // namespace vallab

#endif  // VALLAB_DEHN_HPP
