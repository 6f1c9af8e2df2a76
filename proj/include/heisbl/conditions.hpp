#pragma once

// Linear constraint systems over reciprocal exponents q = (1/p_1, ..., 1/p_2m)
// for Heisenberg Brascamp-Lieb forms.
//
// Index convention: q[j] (0 <= j < m) belongs to the x-side map built from
// V_j, q[j + m] to the y-side map built from the same V_j.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "heisbl/exactla.hpp"

namespace heisbl {

/// The tuple (n, m, V_1..V_m) with cached projections L_j and L^_j = I - L_j.
class ProjectionConfig {
 public:
  ProjectionConfig(std::size_t n, std::vector<Subspace> subspaces);

  std::size_t n() const { return n_; }
  std::size_t m() const { return subspaces_.size(); }
  const std::vector<Subspace>& subspaces() const { return subspaces_; }
  const Subspace& subspace(std::size_t j) const { return subspaces_.at(j); }
  const RationalMatrix& projection(std::size_t j) const { return projections_.at(j); }
  const RationalMatrix& complement_projection(std::size_t j) const { return complements_.at(j); }
  /// n_j = dim V_j.
  std::size_t rank(std::size_t j) const { return subspaces_.at(j).dim(); }
  /// ker L_j = V_j^perp.
  Subspace kernel(std::size_t j) const { return subspaces_.at(j).orthogonal_complement(); }
  bool is_coordinate() const;

  /// Same data with the pairs reordered: result pair i is this pair perm[i].
  ProjectionConfig permuted(const std::vector<std::size_t>& perm) const;

 private:
  std::size_t n_;
  std::vector<Subspace> subspaces_;
  std::vector<RationalMatrix> projections_;
  std::vector<RationalMatrix> complements_;
};

/// q = (1/p_j); 1/inf is represented by 0. All entries lie in [0, 1].
class ReciprocalVector {
 public:
  explicit ReciprocalVector(RationalVector q);
  /// From exponents p_j given as strings ("inf" allowed); each p_j >= 1.
  static ReciprocalVector from_exponents(const std::vector<std::string>& p);
  /// From reciprocal strings; each entry must lie in [0, 1].
  static ReciprocalVector parse(const std::vector<std::string>& q);

  std::size_t size() const { return q_.size(); }
  const Rational& operator[](std::size_t i) const { return q_[i]; }
  const RationalVector& values() const { return q_; }
  /// p_j as strings, "inf" when q_j = 0.
  std::vector<std::string> exponent_strings() const;

 private:
  RationalVector q_;
};

enum class Relation { Eq, Le, Ge };

enum class TagKind { A1, A2, B1, B2, C, C1, C2, BoxLower, BoxUpper, Custom };

/// Provenance of a constraint. `index` points into the system's family (B, C),
/// its pair list (C1, C2) or names a coordinate (box bounds).
struct ConstraintTag {
  TagKind kind = TagKind::Custom;
  std::size_t index = 0;
  bool operator==(const ConstraintTag&) const = default;
};

struct LinearConstraint {
  RationalVector coeffs;
  Rational rhs;
  Relation relation = Relation::Le;
  ConstraintTag tag;

  Rational lhs(const RationalVector& q) const;
  bool satisfied_by(const RationalVector& q) const;
  /// lhs(q) == rhs.
  bool tight_at(const RationalVector& q) const;
};

/// Halfspace a.q <= b scaled to a primitive integer row.
struct Halfspace {
  std::vector<Integer> coeffs;
  Integer rhs;
  bool operator==(const Halfspace&) const = default;
  bool operator<(const Halfspace& o) const;
};

/// Equalities become two halfspaces; `0 <= 0`-type rows become nothing.
std::vector<Halfspace> normalize(const LinearConstraint& c);

enum class Mode { Necessary, Sufficient };
enum class PairPolicy { Complement, All };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& text);

struct ConstraintSystem {
  std::size_t dim = 0;  // 2m
  Mode mode = Mode::Sufficient;
  std::vector<Subspace> family;
  std::vector<std::pair<Subspace, Subspace>> pairs;
  std::vector<LinearConstraint> constraints;

  std::string tag_label(const ConstraintTag& tag) const;
};

// Individual condition generators.
std::array<LinearConstraint, 2> constraint_A(const ProjectionConfig& config);
/// (B1, B2) for V. `family_index` is stored in the tags.
std::array<LinearConstraint, 2> constraint_B(const ProjectionConfig& config, const Subspace& v,
                                             std::size_t family_index = 0);
LinearConstraint constraint_C(const ProjectionConfig& config, const Subspace& v, std::size_t family_index = 0);
/// (C1, C2) for the pair (V, W). Throws InvalidInput unless W <= V^perp.
std::array<LinearConstraint, 2> constraint_C1_C2(const ProjectionConfig& config, const Subspace& v,
                                                 const Subspace& w, std::size_t pair_index = 0);
/// 0 <= q_j <= 1 for every j.
std::vector<LinearConstraint> box_constraints(std::size_t dim);

/// Kernels, images, {0}, R^n and `extra`, closed under pairwise sum and
/// intersection `depth` times; deduplicated and sorted.
std::vector<Subspace> heuristic_family(const ProjectionConfig& config, const std::vector<Subspace>& extra = {},
                                       int depth = 2);

/// Coordinate configs: all coordinate subspaces; otherwise the heuristic family.
std::vector<Subspace> default_family(const ProjectionConfig& config, int depth = 2);

/// Sufficient: (A) + (B1) + (B2) + (C); necessary: (A) + (B1) + (B2) + (C1) + (C2).
/// Both add the box bounds. Throws InvalidInput on an empty family or a
/// member with the wrong ambient dimension.
ConstraintSystem build_system(const ProjectionConfig& config, const std::vector<Subspace>& family, Mode mode,
                              PairPolicy pairs = PairPolicy::Complement);

/// Members of `family` at which both (B1) and (B2) are equalities at q.
std::vector<Subspace> critical_subspaces(const ProjectionConfig& config, const ReciprocalVector& q,
                                         const std::vector<Subspace>& family);

/// Whether the two (A) equalities hold at q.
bool satisfies_A(const ProjectionConfig& config, const ReciprocalVector& q);

}  // namespace heisbl
