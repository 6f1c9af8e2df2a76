#pragma once

// Monte Carlo evaluation of the multilinear form
//   M^{a,b}(f_1, ..., f_2m) = integral over H^n of prod_j f_j(pi_j^{a,b}(p)) dp
// for box indicator functions.

#include <cstdint>
#include <vector>

#include "heisbl/geometry.hpp"

namespace heisbl {

/// Indicator of a box in the codomain coordinates of one map (see
/// VerticalProjection::apply), or the zero function. Bounds may be infinite.
struct BoxFunction {
  bool zero = false;
  std::vector<double> lo, hi;

  static BoxFunction zero_function() { return {true, {}, {}}; }
  /// Lebesgue measure of the support in orthonormal codomain coordinates.
  double support_measure(const VerticalProjection& pi) const;
  /// The box under the Heisenberg dilation: space scaled by lambda, t by lambda^2.
  BoxFunction dilated(double lambda) const;
};

struct MonteCarloOptions {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  /// 0 picks the hardware concurrency. The estimate does not depend on it.
  unsigned workers = 0;
};

struct MonteCarloResult {
  double estimate = 0;
  double standard_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  /// Sampling box over (x, y, t) and its volume; empty when the integrand vanishes.
  std::vector<double> box_lo, box_hi;
  double box_volume = 0;
};

/// Uniform sampling over a box containing the support of the integrand:
/// x from the y-side supports, y from the x-side supports, t from each
/// support's t-range widened by a bound on the twist term. Throws
/// InvalidInput when that box is unbounded or the arity is wrong.
MonteCarloResult monte_carlo_form(const ProjectionConfig& config, const Offsets& offsets,
                                  const std::vector<BoxFunction>& functions, const MonteCarloOptions& options = {});

struct DilationRow {
  double lambda = 1;
  MonteCarloResult form;
  /// prod_j ||f_j||_{p_j} with ||1_E||_p = |E|^{1/p}.
  double norm_product = 0;
  double ratio = 0;
};

/// The form at f_j dilated by lambda = 2^0 .. 2^steps, divided by the norm
/// product at q. Each row reuses the same seed.
std::vector<DilationRow> dilation_sweep(const ProjectionConfig& config, const Offsets& offsets,
                                        const std::vector<BoxFunction>& functions, const ReciprocalVector& q,
                                        int steps, const MonteCarloOptions& options = {});

}  // namespace heisbl
