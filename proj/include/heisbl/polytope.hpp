#pragma once

// Exact H- to V-representation conversion for the bounded polytopes cut out
// by a ConstraintSystem inside [0,1]^d.

#include <cstddef>
#include <vector>

#include "heisbl/conditions.hpp"

namespace heisbl {

/// Bounded H-polytope. The box bounds 0 <= q_j <= 1 are always present; the
/// constructor appends any that are missing.
class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<LinearConstraint> constraints);
  static HPolytope from_system(const ConstraintSystem& system);

  std::size_t dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

 private:
  std::size_t dim_;
  std::vector<LinearConstraint> constraints_;
};

struct VPolytope {
  /// Sorted lexicographically; each vertex appears once.
  std::vector<RationalVector> vertices;
  bool empty() const { return vertices.empty(); }
};

struct Membership {
  bool inside = true;
  /// Indices into HPolytope::constraints() of the violated constraints.
  std::vector<std::size_t> violated;
};

/// Double description: equalities are eliminated by an exact affine-hull
/// parameterization, then inequalities are inserted one at a time (smallest
/// estimated cut first) into the homogenized cone. Infeasible -> empty.
VPolytope enumerate_vertices(const HPolytope& h);

/// Independent oracle: solves every nonsingular d-subset of constraint rows
/// and keeps the feasible solutions. Throws InvalidInput when the instance is
/// too large (d > 8, more than 40 non-box constraints, or too many subsets).
VPolytope brute_force_vertices(const HPolytope& h);

Membership contains(const HPolytope& h, const RationalVector& q);

/// Dimension of the affine hull; -1 for the empty set.
int affine_dimension(const VPolytope& v);
int affine_dimension(const HPolytope& h);

}  // namespace heisbl
