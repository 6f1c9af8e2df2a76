#pragma once

// Vector fields tangent to the fibres of the maps pi_j, their brackets, and
// the frame-pair readout of extreme points in the codimension-one setting.

#include <string>
#include <utility>
#include <vector>

#include "heisbl/geometry.hpp"

namespace heisbl {

/// X = sum spatial_i d/d(x,y)_i + (t_linear.(x,y) + t_constant) d/dt.
struct TangentField {
  std::size_t index = 0;  // map index, 0-based
  Side side = Side::X;
  RationalVector spatial;   // length 2n
  RationalVector t_linear;  // length 2n
  Rational t_constant;

  /// E.g. "d/dx1 - 1/2 y1 d/dt".
  std::string describe() const;
};

/// One field per kernel direction of each map. Directions are primitive
/// integer vectors with positive leading entry (orthogonal when ker L_j has
/// dimension > 1). x-side: spatial v in the x block, dt coefficient
/// -v.(L^y + b)/2; y-side: w in the y block, +(L^x + a).w/2.
std::vector<TangentField> tangent_fields(const ProjectionConfig& config, const Offsets& offsets = {});

/// [X, Y] = c d/dt; returns c = X(Y_t) - Y(X_t).
Rational lie_bracket(const TangentField& x, const TangentField& y);

/// Throws InvalidInput unless every kernel has dimension one and 2m = 2n.
void require_codimension_one(const ProjectionConfig& config);

/// Pairs (j, k), j < k (0-based), for which the 2n fields plus [X_j, X_k]
/// span R^{2n+1}.
std::vector<std::pair<std::size_t, std::size_t>> frame_pairs(const ProjectionConfig& config);

/// q_i = (1 + [i in {j, k}]) / (2n + 1) for each frame pair.
std::vector<ReciprocalVector> frame_extreme_points(const ProjectionConfig& config);

/// True for the two n = 2 configurations where the readout has been worked
/// out by hand: {<e1>, <e2>} and {<e2>, <(1,1)>} (in either order).
bool is_worked_example(const ProjectionConfig& config);

struct BracketEntry {
  std::size_t j = 0, k = 0;
  Rational value;
};

struct FrameReport {
  std::vector<TangentField> fields;
  std::vector<BracketEntry> brackets;  // every pair j < k
  bool spatial_span_full = false;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<ReciprocalVector> points;
  bool conjectural = true;
};

FrameReport analyze_frames(const ProjectionConfig& config);

}  // namespace heisbl
