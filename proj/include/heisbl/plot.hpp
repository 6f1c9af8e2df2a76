#pragma once

// Two-coordinate slices of exponent polytopes rendered as SVG or CSV.

#include <array>
#include <string>
#include <vector>

#include "heisbl/exactla.hpp"

namespace heisbl {

using PlanePoint = std::array<Rational, 2>;

struct PlotSeries {
  std::string label;
  bool feasible = true;
  /// Convex hull in counter-clockwise order (1 or 2 points for degenerate hulls).
  std::vector<PlanePoint> hull;
};

/// Exact monotone-chain hull; collinear and repeated points are dropped.
std::vector<PlanePoint> convex_hull(std::vector<PlanePoint> points);

/// Projects vertices onto coordinates (i, k), 0-based. Throws InvalidInput
/// when the polytope is more than two-dimensional or the projection is not
/// injective on its affine hull.
PlotSeries slice_series(const std::string& label, const std::vector<RationalVector>& vertices, std::size_t i,
                        std::size_t k);

std::string render_svg(const std::vector<PlotSeries>& series, std::size_t i, std::size_t k);
/// Rows "series,q_i,q_k" with exact fractions, hull order.
std::string render_plot_csv(const std::vector<PlotSeries>& series, std::size_t i, std::size_t k);

}  // namespace heisbl
