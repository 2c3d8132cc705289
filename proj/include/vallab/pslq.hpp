#ifndef VALLAB_PSLQ_HPP
#define VALLAB_PSLQ_HPP

#include <vector>

#include "vallab/bigfixed.hpp"

namespace vallab {

struct RelationSearch {
  enum class Status { RelationFound, NoRelationUnderBound, Exhausted };
  Status status = Status::Exhausted;
  // Integer coefficients c with |sum_i c_i x_i| <= eps when found.
  std::vector<long long> relation;
  // Certified lower bound on the 2-norm of any integer relation of x at the
  // moment the search stopped.
  double certified_norm_bound = 0.0;
  int iterations = 0;
};

// PSLQ over the vector x (shared precision). Terminates with RelationFound
// when some verified relation of sup-norm <= height_bound drops the residual
// below eps, with NoRelationUnderBound once the norm bound excludes every
// relation of sup-norm <= height_bound, or Exhausted on numeric limits.
RelationSearch pslq_search(const std::vector<BigFixed>& x, double height_bound,
                           const BigFixed& eps, int max_iter = 20000);

// Two-term search via continued fractions of x0/x1: complete for
// eps < |x1| / (2 * height_bound) by the best-approximation property.
RelationSearch ratio_relation(const BigFixed& x0, const BigFixed& x1,
                              double height_bound, const BigFixed& eps);

}  // namespace vallab

#endif  // VALLAB_PSLQ_HPP
