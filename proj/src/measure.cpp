#include "heisbl/measure.hpp"

#include <cmath>
#include <numeric>

#include "parallel.hpp"

namespace heisbl {

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;  // row-major

double det(Mat a) {
  const std::size_t n = a.size();
  double d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

double vdot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = vdot(m[i], v);
  return out;
}

Mat to_double(const RationalMatrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) out[i][k] = m(i, k).get_d();
  return out;
}

// Zonotope-volume term A + B.beta, beta the retained-block coefficients.
struct Term {
  double a = 0;
  Vec b;
};

void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// [min |f|, max |f|] for f = a + b.beta over a box given by center and half widths.
std::pair<double, double> abs_range(const Term& t, const Vec& center, const Vec& half) {
  double mid = t.a, spread = 0;
  for (std::size_t k = 0; k < t.b.size(); ++k) {
    mid += t.b[k] * center[k];
    spread += std::fabs(t.b[k]) * half[k];
  }
  const double lo = mid - spread, hi = mid + spread;
  if (lo <= 0 && hi >= 0) return {0.0, std::max(-lo, hi)};
  return {std::min(std::fabs(lo), std::fabs(hi)), std::max(std::fabs(lo), std::fabs(hi))};
}

constexpr std::size_t kCellsPerChunk = 1 << 14;
constexpr double kOutward = 1e-12;

}  // namespace

MeasureBracket estimate_image_measure(const VerticalProjection& pi, const WitnessBox& omega, const GridSpec& grid) {
  if (!(grid.h > 0) || grid.h > 1) throw InvalidInput("grid h must lie in (0, 1]");
  const std::size_t n = pi.n();
  if (omega.x_basis.size() != n || omega.y_basis.size() != n)
    throw InvalidInput("witness box dimension does not match the projection");
  if (omega.empty()) return {0, 0, 0};

  const bool xside = pi.side() == Side::X;
  const Mat& moved = xside ? omega.x_basis : omega.y_basis;
  const Vec& moved_lo = xside ? omega.x_lo : omega.y_lo;
  const Vec& moved_hi = xside ? omega.x_hi : omega.y_hi;
  const Mat& kept = xside ? omega.y_basis : omega.x_basis;
  const Vec& kept_lo = xside ? omega.y_lo : omega.x_lo;
  const Vec& kept_hi = xside ? omega.y_hi : omega.x_hi;
  Vec offset;
  for (const auto& c : xside ? pi.offset_b() : pi.offset_a()) offset.push_back(c.get_d());
  const double sign = xside ? 0.5 : -0.5;
  const Mat lhat = to_double(pi.complement());

  Mat q;  // orthonormal basis of V_j
  {
    const auto norms = pi.block_norms();
    for (std::size_t i = 0; i < pi.block_dim(); ++i) {
      Vec u;
      for (const auto& c : pi.block_basis()[i]) u.push_back(c.get_d() / norms[i]);
      q.push_back(std::move(u));
    }
  }
  const std::size_t nj = q.size();
  const std::size_t d = nj + 1;

  // Spatial generators: top part s_i Q^T u_i, last entry s_i (c0_i + c_i.beta).
  const std::size_t ng = moved.size();
  Mat top(ng, Vec(nj));
  Vec c0(ng);
  Mat c(ng, Vec(kept.size()));
  for (std::size_t i = 0; i < ng; ++i) {
    const double s = (moved_hi[i] - moved_lo[i]) / 2;
    for (std::size_t r = 0; r < nj; ++r) top[i][r] = s * vdot(q[r], moved[i]);
    c0[i] = sign * s * vdot(moved[i], offset);
    const Vec lu = mat_apply(lhat, moved[i]);
    for (std::size_t k = 0; k < kept.size(); ++k) c[i][k] = sign * s * vdot(lu, kept[k]);
  }
  const double st = (omega.t_hi - omega.t_lo) / 2;

  auto top_det = [&](const std::vector<std::size_t>& cols) {
    Mat m(nj, Vec(nj));
    for (std::size_t r = 0; r < nj; ++r)
      for (std::size_t k = 0; k < nj; ++k) m[r][k] = top[cols[k]][r];
    return det(std::move(m));
  };

  // Generator index ng is the t direction (0, ..., 0, s_t).
  std::vector<std::vector<std::size_t>> subsets;
  combinations(ng + 1, d, subsets);
  std::vector<Term> terms;
  for (const auto& s : subsets) {
    Term t;
    t.b.assign(kept.size(), 0.0);
    if (s.back() == ng) {
      std::vector<std::size_t> spatial(s.begin(), s.end() - 1);
      t.a = st * top_det(spatial);
    } else {
      for (std::size_t pos = 0; pos < d; ++pos) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < d; ++k)
          if (k != pos) rest.push_back(s[k]);
        const double cof = ((nj + pos) % 2 == 0 ? 1.0 : -1.0) * top_det(rest);
        if (cof == 0) continue;
        t.a += cof * c0[s[pos]];
        for (std::size_t k = 0; k < kept.size(); ++k) t.b[k] += cof * c[s[pos]][k];
      }
    }
    terms.push_back(std::move(t));
  }

  Vec center(kept.size()), half(kept.size());
  double kept_volume = 1;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    center[k] = (kept_lo[k] + kept_hi[k]) / 2;
    half[k] = (kept_hi[k] - kept_lo[k]) / 2;
    kept_volume *= 2 * half[k];
  }
  const double scale = std::ldexp(1.0, static_cast<int>(d));

  std::uint64_t per_axis = 1;
  while (per_axis * grid.h < 1.0 - 1e-12) per_axis *= 2;

  double exact = 0;
  std::vector<const Term*> gridded;
  std::uint64_t total_cells = 0;
  for (const auto& t : terms) {
    double mid = t.a, spread = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      mid += t.b[k] * center[k];
      spread += std::fabs(t.b[k]) * half[k];
    }
    if (mid - spread >= 0 || mid + spread <= 0) {
      // Constant sign over the whole block: the integral of |f| is |f(center)| * volume.
      exact += std::fabs(mid) * kept_volume;
      continue;
    }
    std::uint64_t cells = 1;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (t.b[k] != 0 && half[k] > 0) {
        if (cells > grid.budget / per_axis) throw BudgetExceeded("measure grid exceeds the cell budget");
        cells *= per_axis;
      }
    total_cells += cells;
    if (total_cells > grid.budget) throw BudgetExceeded("measure grid exceeds the cell budget");
    gridded.push_back(&t);
  }

  double grid_lo = 0, grid_hi = 0;
  for (const Term* t : gridded) {
    std::vector<std::uint64_t> axis_cells(kept.size(), 1);
    std::uint64_t cells = 1;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (t->b[k] != 0 && half[k] > 0) {
        axis_cells[k] = per_axis;
        cells *= per_axis;
      }
    Vec cell_half(kept.size());
    double cell_volume = 1;
    for (std::size_t k = 0; k < kept.size(); ++k) {
      cell_half[k] = half[k] / double(axis_cells[k]);
      cell_volume *= 2 * cell_half[k];
    }
    const std::size_t chunks = static_cast<std::size_t>((cells + kCellsPerChunk - 1) / kCellsPerChunk);
    auto partial = detail::map_chunks<std::pair<double, double>>(chunks, grid.workers, [&](std::size_t chunk) {
      double lo = 0, hi = 0;
      Vec cc(kept.size());
      const std::uint64_t begin = chunk * kCellsPerChunk;
      const std::uint64_t end = std::min<std::uint64_t>(cells, begin + kCellsPerChunk);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rem = idx;
        for (std::size_t k = 0; k < kept.size(); ++k) {
          const std::uint64_t i = rem % axis_cells[k];
          rem /= axis_cells[k];
          cc[k] = kept_lo[k] + (2 * double(i) + 1) * cell_half[k];
        }
        const auto [a, b] = abs_range(*t, cc, cell_half);
        lo += a;
        hi += b;
      }
      return std::make_pair(lo, hi);
    });
    for (const auto& [a, b] : partial) {
      grid_lo += a * cell_volume;
      grid_hi += b * cell_volume;
    }
  }

  MeasureBracket out;
  out.lower = scale * (exact + grid_lo) * (1 - kOutward);
  out.upper = scale * (exact + grid_hi) * (1 + kOutward);
  out.cells = std::max<std::uint64_t>(total_cells, 1);
  return out;
}

double fit_scaling_exponent(const std::vector<double>& parameters, const std::vector<double>& measures) {
  if (parameters.size() != measures.size()) throw InvalidInput("slope fit: mismatched sample counts");
  if (parameters.size() < 4) throw InvalidInput("slope fit needs at least four samples");
  const double k = double(parameters.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    if (!(parameters[i] > 0)) throw InvalidInput("slope fit: parameters must be positive");
    if (!(measures[i] > 0)) throw InvalidInput("slope fit: measure samples must be positive");
    const double x = std::log(parameters[i]), y = std::log(measures[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double den = k * sxx - sx * sx;
  if (den == 0) throw InvalidInput("slope fit: parameters must not all be equal");
  return (k * sxy - sx * sy) / den;
}

std::vector<double> geometric_ladder(double r0, double factor, int count) {
  if (!(r0 > 0) || !(factor > 0) || factor == 1 || count < 1) throw InvalidInput("ladder needs r0 > 0, factor > 0, factor != 1, count >= 1");
  std::vector<double> out;
  double r = r0;
  for (int i = 0; i < count; ++i, r *= factor) out.push_back(r);
  return out;
}

WitnessTable witness_ladder(const ProjectionConfig& config, const BoxWitness& witness,
                            const std::vector<double>& parameters, const GridSpec& grid,
                            const std::optional<ReciprocalVector>& q, const Offsets& offsets) {
  const auto maps = vertical_projections(config, offsets);
  if (q && q->size() != maps.size()) throw InvalidInput("q has the wrong number of entries");
  WitnessTable table;
  if (q) {
    Rational pred = -witness.omega_exponent();
    for (std::size_t j = 0; j < maps.size(); ++j) pred += (*q)[j] * witness.image_exponents()[j];
    table.predicted_ratio_exponent = pred;
  }
  for (double p : parameters) {
    LadderRow row;
    row.parameter = p;
    const WitnessBox box = witness.instantiate(p);
    row.omega = box.volume();
    try {
      for (const auto& pi : maps) row.images.push_back(estimate_image_measure(pi, box, grid));
    } catch (const BudgetExceeded& e) {
      table.complete = false;
      table.failure = e.what();
      break;
    }
    if (q) {
      double denom = 1;
      for (std::size_t j = 0; j < maps.size(); ++j) denom *= std::pow(row.images[j].mid(), (*q)[j].get_d());
      row.ratio = row.omega / denom;
    }
    table.rows.push_back(std::move(row));
  }
  if (table.complete && table.rows.size() >= 4) {
    std::vector<double> ps, om;
    for (const auto& r : table.rows) {
      ps.push_back(r.parameter);
      om.push_back(r.omega);
    }
    table.omega_slope = fit_scaling_exponent(ps, om);
    for (std::size_t j = 0; j < maps.size(); ++j) {
      std::vector<double> ms;
      for (const auto& r : table.rows) ms.push_back(r.images[j].mid());
      table.image_slopes.push_back(fit_scaling_exponent(ps, ms));
    }
  }
  return table;
}

RwtSweep rwt_ratio_sweep(const ProjectionConfig& config, const ReciprocalVector& q, const BoxWitness& witness,
                         const std::vector<double>& parameters, const GridSpec& grid) {
  const auto table = witness_ladder(config, witness, parameters, grid, q);
  if (!table.complete) throw BudgetExceeded(table.failure);
  RwtSweep out;
  out.predicted_exponent = *table.predicted_ratio_exponent;
  for (const auto& r : table.rows) {
    out.parameters.push_back(r.parameter);
    out.ratios.push_back(*r.ratio);
  }
  return out;
}

}  // namespace heisbl
