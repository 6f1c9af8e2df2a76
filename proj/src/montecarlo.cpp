#include "heisbl/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "parallel.hpp"

namespace heisbl {

double BoxFunction::support_measure(const VerticalProjection& pi) const {
  if (zero) return 0;
  if (lo.size() != pi.codomain_dim() || hi.size() != pi.codomain_dim())
    throw InvalidInput("function box has the wrong number of coordinates");
  double v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] <= lo[i]) return 0;
    v *= hi[i] - lo[i];
  }
  // Block coefficients c_i are |b_i| times shorter than orthonormal ones.
  for (double norm : pi.block_norms()) v *= norm;
  return v;
}

BoxFunction BoxFunction::dilated(double lambda) const {
  if (zero) return *this;
  BoxFunction out = *this;
  const std::size_t last = lo.size() - 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const double s = i == last ? lambda * lambda : lambda;
    out.lo[i] = lo[i] * s;
    out.hi[i] = hi[i] * s;
  }
  return out;
}

namespace {

struct FastMap {
  bool xside = true;
  std::size_t n = 0;
  std::vector<std::vector<double>> block;  // rows b_i / |b_i|^2
  std::vector<std::vector<double>> lhat;
  std::vector<double> a, b;
  std::vector<double> lo, hi;

  double twist(const double* x, const double* y) const {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double u = a[i], v = b[i];
      for (std::size_t k = 0; k < n; ++k) {
        u += lhat[i][k] * x[k];
        v += lhat[i][k] * y[k];
      }
      s += u * v;
    }
    return s / 2;
  }

  bool accepts(const double* x, const double* y, double t) const {
    const double* moved = xside ? x : y;
    const double* kept = xside ? y : x;
    const std::size_t nj = block.size();
    const std::size_t kept_at = xside ? nj : 0;
    const std::size_t block_at = xside ? 0 : n;
    for (std::size_t i = 0; i < n; ++i)
      if (kept[i] < lo[kept_at + i] || kept[i] > hi[kept_at + i]) return false;
    for (std::size_t i = 0; i < nj; ++i) {
      double c = 0;
      for (std::size_t k = 0; k < n; ++k) c += block[i][k] * moved[k];
      if (c < lo[block_at + i] || c > hi[block_at + i]) return false;
    }
    const double tt = xside ? t + twist(x, y) : t - twist(x, y);
    return tt >= lo.back() && tt <= hi.back();
  }
};

FastMap fast_map(const VerticalProjection& pi, const BoxFunction& f) {
  FastMap m;
  m.xside = pi.side() == Side::X;
  m.n = pi.n();
  for (std::size_t i = 0; i < pi.block_dim(); ++i) {
    const auto& b = pi.block_basis()[i];
    const double n2 = dot(b, b).get_d();
    std::vector<double> row;
    for (const auto& c : b) row.push_back(c.get_d() / n2);
    m.block.push_back(std::move(row));
  }
  m.lhat.assign(m.n, std::vector<double>(m.n));
  for (std::size_t i = 0; i < m.n; ++i)
    for (std::size_t k = 0; k < m.n; ++k) m.lhat[i][k] = pi.complement()(i, k).get_d();
  for (const auto& c : pi.offset_a()) m.a.push_back(c.get_d());
  for (const auto& c : pi.offset_b()) m.b.push_back(c.get_d());
  m.lo = f.lo;
  m.hi = f.hi;
  return m;
}

// max |L^v + off| over the box lo <= v <= hi (a convex function, so a corner maximises it).
double max_shifted_norm(const FastMap& m, const std::vector<double>& lo, const std::vector<double>& hi,
                        const std::vector<double>& off) {
  const std::size_t n = lo.size();
  if (n > 16) {
    double r = 0, o = 0;
    for (std::size_t k = 0; k < n; ++k) {
      r += std::max(lo[k] * lo[k], hi[k] * hi[k]);
      o += off[k] * off[k];
    }
    return std::sqrt(r) + std::sqrt(o);
  }
  double best = 0;
  std::vector<double> v(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    for (std::size_t k = 0; k < n; ++k) v[k] = (mask >> k) & 1 ? hi[k] : lo[k];
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      double u = off[i];
      for (std::size_t k = 0; k < n; ++k) u += m.lhat[i][k] * v[k];
      s += u * u;
    }
    best = std::max(best, std::sqrt(s));
  }
  return best;
}

constexpr std::uint64_t kSamplesPerChunk = 1 << 16;

}  // namespace

MonteCarloResult monte_carlo_form(const ProjectionConfig& config, const Offsets& offsets,
                                  const std::vector<BoxFunction>& functions, const MonteCarloOptions& options) {
  const std::size_t n = config.n();
  const auto maps = vertical_projections(config, offsets);
  if (functions.size() != maps.size()) throw InvalidInput("the form needs exactly 2m functions");
  for (std::size_t j = 0; j < maps.size(); ++j)
    if (!functions[j].zero && (functions[j].lo.size() != maps[j].codomain_dim() || functions[j].hi.size() != maps[j].codomain_dim()))
      throw InvalidInput("function " + std::to_string(j + 1) + " has the wrong number of coordinates");
  if (options.samples == 0) throw InvalidInput("sample budget must be positive");

  MonteCarloResult out;
  out.samples = options.samples;
  for (const auto& f : functions)
    if (f.zero) return out;

  std::vector<FastMap> fast;
  for (std::size_t j = 0; j < maps.size(); ++j) fast.push_back(fast_map(maps[j], functions[j]));

  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> xlo(n, -inf), xhi(n, inf), ylo(n, -inf), yhi(n, inf);
  for (const auto& f : fast) {
    auto& lo = f.xside ? ylo : xlo;
    auto& hi = f.xside ? yhi : xhi;
    const std::size_t at = f.xside ? f.block.size() : 0;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::max(lo[i], f.lo[at + i]);
      hi[i] = std::min(hi[i], f.hi[at + i]);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(xlo[i]) || !std::isfinite(xhi[i]) || !std::isfinite(ylo[i]) || !std::isfinite(yhi[i]))
      throw InvalidInput("unbounded support: the function boxes do not bound every x and y coordinate");
  for (std::size_t i = 0; i < n; ++i)
    if (xhi[i] < xlo[i] || yhi[i] < ylo[i]) return out;

  double tlo = -inf, thi = inf;
  for (const auto& f : fast) {
    const double bound = 0.5 * max_shifted_norm(f, xlo, xhi, f.a) * max_shifted_norm(f, ylo, yhi, f.b);
    tlo = std::max(tlo, f.lo.back() - bound);
    thi = std::min(thi, f.hi.back() + bound);
  }
  if (!std::isfinite(tlo) || !std::isfinite(thi)) throw InvalidInput("unbounded support: no function bounds t");
  if (thi < tlo) return out;

  out.box_lo = xlo;
  out.box_lo.insert(out.box_lo.end(), ylo.begin(), ylo.end());
  out.box_lo.push_back(tlo);
  out.box_hi = xhi;
  out.box_hi.insert(out.box_hi.end(), yhi.begin(), yhi.end());
  out.box_hi.push_back(thi);
  out.box_volume = 1;
  for (std::size_t i = 0; i < out.box_lo.size(); ++i) out.box_volume *= out.box_hi[i] - out.box_lo[i];

  const std::uint64_t chunks = (options.samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  const auto hits = detail::map_chunks<std::uint64_t>(chunks, options.workers, [&](std::size_t chunk) {
    std::seed_seq seq{std::uint32_t(options.seed), std::uint32_t(options.seed >> 32), std::uint32_t(chunk),
                      std::uint32_t(std::uint64_t(chunk) >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t begin = chunk * kSamplesPerChunk;
    const std::uint64_t end = std::min(options.samples, begin + kSamplesPerChunk);
    std::vector<double> p(2 * n + 1);
    std::uint64_t count = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double u = double(rng() >> 11) * 0x1.0p-53;
        p[i] = out.box_lo[i] + u * (out.box_hi[i] - out.box_lo[i]);
      }
      bool ok = true;
      for (const auto& f : fast)
        if (!f.accepts(p.data(), p.data() + n, p[2 * n])) {
          ok = false;
          break;
        }
      if (ok) ++count;
    }
    return count;
  });
  for (auto h : hits) out.hits += h;

  const double total = double(options.samples);
  const double frac = double(out.hits) / total;
  out.estimate = out.box_volume * frac;
  out.standard_error = options.samples > 1 ? out.box_volume * std::sqrt(frac * (1 - frac) / (total - 1)) : 0.0;
  return out;
}

std::vector<DilationRow> dilation_sweep(const ProjectionConfig& config, const Offsets& offsets,
                                        const std::vector<BoxFunction>& functions, const ReciprocalVector& q,
                                        int steps, const MonteCarloOptions& options) {
  const auto maps = vertical_projections(config, offsets);
  if (q.size() != maps.size()) throw InvalidInput("q has the wrong number of entries");
  if (steps < 0) throw InvalidInput("dilation steps must be nonnegative");
  std::vector<DilationRow> rows;
  for (int k = 0; k <= steps; ++k) {
    DilationRow row;
    row.lambda = std::ldexp(1.0, k);
    std::vector<BoxFunction> fs;
    for (const auto& f : functions) fs.push_back(f.dilated(row.lambda));
    row.form = monte_carlo_form(config, offsets, fs, options);
    row.norm_product = 1;
    for (std::size_t j = 0; j < maps.size(); ++j) {
      const double measure = fs[j].support_measure(maps[j]);
      const double qj = q[j].get_d();
      row.norm_product *= qj == 0 ? (measure > 0 ? 1.0 : 0.0) : std::pow(measure, qj);
    }
    row.ratio = row.norm_product > 0 ? row.form.estimate / row.norm_product : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace heisbl
