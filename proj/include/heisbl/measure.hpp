#pragma once

// Rigorous two-sided estimates of |pi(Omega)| for box witnesses, slope fits
// over parameter ladders, and restricted weak-type ratio sweeps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heisbl/geometry.hpp"
#include "heisbl/witness.hpp"

namespace heisbl {

struct GridSpec {
  /// Cell edge as a fraction of each side of the integrated block. Rounded
  /// down to a power of two, so halving h always refines the previous grid.
  double h = 1.0 / 64;
  /// Maximum number of grid cells per estimate; BudgetExceeded beyond it.
  std::uint64_t budget = 100'000'000;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  unsigned workers = 0;
};

struct MeasureBracket {
  double lower = 0;
  double upper = 0;
  std::uint64_t cells = 0;
  double mid() const { return (lower + upper) / 2; }
};

/// For each value of the block that pi leaves alone, the fiber of Omega maps
/// onto a zonotope whose volume is a sum of |affine| terms; integrating those
/// over a grid with exact per-cell extremes brackets |pi(Omega)| from both
/// sides. Measures are taken in orthonormal coordinates of the codomain.
MeasureBracket estimate_image_measure(const VerticalProjection& pi, const WitnessBox& omega, const GridSpec& grid = {});

/// Least-squares slope of log(measure) against log(parameter). Needs at least
/// four points, all parameters and measures positive (InvalidInput otherwise).
double fit_scaling_exponent(const std::vector<double>& parameters, const std::vector<double>& measures);

/// r0, r0*factor, ..., count values.
std::vector<double> geometric_ladder(double r0, double factor, int count);

struct LadderRow {
  double parameter = 0;
  double omega = 0;
  std::vector<MeasureBracket> images;
  /// |Omega| / prod_j mid_j^{q_j}, when q was supplied.
  std::optional<double> ratio;
};

struct WitnessTable {
  std::vector<LadderRow> rows;
  /// Filled only when the ladder completed with at least four rows.
  std::optional<double> omega_slope;
  std::vector<double> image_slopes;
  bool complete = true;
  std::string failure;
  /// sum_j q_j e_j - e_Omega; the ratio behaves like parameter^(-value).
  std::optional<Rational> predicted_ratio_exponent;
};

/// Evaluates the witness along the ladder. A BudgetExceeded at some parameter
/// stops the ladder and marks the table incomplete instead of throwing.
WitnessTable witness_ladder(const ProjectionConfig& config, const BoxWitness& witness,
                            const std::vector<double>& parameters, const GridSpec& grid = {},
                            const std::optional<ReciprocalVector>& q = std::nullopt, const Offsets& offsets = {});

struct RwtSweep {
  std::vector<double> parameters;
  std::vector<double> ratios;
  Rational predicted_exponent;
};

/// Ratios |Omega| / prod_j |pi_j(Omega)|^{q_j} from bracket midpoints, with
/// the exponent sum_j q_j e_j - e_Omega predicted for them. Propagates
/// BudgetExceeded.
RwtSweep rwt_ratio_sweep(const ProjectionConfig& config, const ReciprocalVector& q, const BoxWitness& witness,
                         const std::vector<double>& parameters, const GridSpec& grid = {});

}  // namespace heisbl
