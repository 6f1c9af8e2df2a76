#include "heisbl/witness.hpp"

#include <cmath>

#include "heisbl/geometry.hpp"

namespace heisbl {

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::A1: return "A1";
    case WitnessKind::A2: return "A2";
    case WitnessKind::B1: return "B1";
    case WitnessKind::B2: return "B2";
    case WitnessKind::C1: return "C1";
    case WitnessKind::C2: return "C2";
  }
  return "?";
}

WitnessKind parse_witness_kind(const std::string& text) {
  for (auto k : {WitnessKind::A1, WitnessKind::A2, WitnessKind::B1, WitnessKind::B2, WitnessKind::C1, WitnessKind::C2})
    if (text == to_string(k)) return k;
  throw InvalidInput("unknown condition '" + text + "' (expected A1, A2, B1, B2, C1 or C2)");
}

WitnessBox WitnessBox::axis_aligned(std::vector<double> x_lo, std::vector<double> x_hi, std::vector<double> y_lo,
                                    std::vector<double> y_hi, double t_lo, double t_hi) {
  const std::size_t n = x_lo.size();
  if (x_hi.size() != n || y_lo.size() != n || y_hi.size() != n) throw InvalidInput("box bounds have mismatched lengths");
  WitnessBox b;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> e(n, 0.0);
    e[i] = 1.0;
    b.x_basis.push_back(e);
    b.y_basis.push_back(e);
  }
  b.x_lo = std::move(x_lo);
  b.x_hi = std::move(x_hi);
  b.y_lo = std::move(y_lo);
  b.y_hi = std::move(y_hi);
  b.t_lo = t_lo;
  b.t_hi = t_hi;
  return b;
}

bool WitnessBox::empty() const {
  for (std::size_t i = 0; i < x_lo.size(); ++i)
    if (x_hi[i] < x_lo[i]) return true;
  for (std::size_t i = 0; i < y_lo.size(); ++i)
    if (y_hi[i] < y_lo[i]) return true;
  return t_hi < t_lo;
}

double WitnessBox::volume() const {
  if (empty()) return 0.0;
  double v = t_hi - t_lo;
  for (std::size_t i = 0; i < x_lo.size(); ++i) v *= x_hi[i] - x_lo[i];
  for (std::size_t i = 0; i < y_lo.size(); ++i) v *= y_hi[i] - y_lo[i];
  return v;
}

namespace {

std::vector<WitnessBlock> split(const Subspace& v, int on_v, int on_perp) {
  std::vector<WitnessBlock> out;
  if (!v.is_zero()) out.push_back({v, on_v});
  if (!v.is_full()) out.push_back({v.orthogonal_complement(), on_perp});
  return out;
}

long dim_of(const Subspace& v) { return static_cast<long>(v.dim()); }

}  // namespace

BoxWitness BoxWitness::make(const ProjectionConfig& config, WitnessKind kind, const Subspace& v_in,
                            const Subspace& w_in) {
  const std::size_t n = config.n();
  const std::size_t m = config.m();
  const Subspace full = Subspace::full(n);
  BoxWitness wit;
  wit.kind_ = kind;
  wit.image_exponents_.resize(2 * m);

  auto need = [&](const Subspace& s, const char* name) {
    if (s.ambient_dim() != n) throw InvalidInput(std::string("witness subspace ") + name + " has the wrong ambient dimension");
  };

  switch (kind) {
    case WitnessKind::A1:
    case WitnessKind::A2: {
      // |x| <= r, |y| <= 1, |t| <= r for A1; x and y swapped for A2.
      const bool first = kind == WitnessKind::A1;
      wit.parameter_ = "r";
      wit.v_ = full;
      wit.w_ = Subspace::zero(n);
      wit.x_blocks_ = split(full, first ? 1 : 0, 0);
      wit.y_blocks_ = split(full, first ? 0 : 1, 0);
      wit.t_exponent_ = 1;
      wit.omega_exponent_ = long(n + 1);
      for (std::size_t j = 0; j < m; ++j) {
        const long nj = long(config.rank(j)) + 1;
        wit.image_exponents_[j] = first ? nj : long(n + 1);
        wit.image_exponents_[j + m] = first ? long(n + 1) : nj;
      }
      break;
    }
    case WitnessKind::B1:
    case WitnessKind::B2: {
      // |x_V| <= R, |x_{V^perp}| <= 1, |y| <= 1, |t| <= R for B1; mirrored for B2.
      need(v_in, "V");
      const bool first = kind == WitnessKind::B1;
      wit.parameter_ = "R";
      wit.v_ = v_in;
      wit.w_ = Subspace::zero(n);
      wit.x_blocks_ = first ? split(v_in, 1, 0) : split(full, 0, 0);
      wit.y_blocks_ = first ? split(full, 0, 0) : split(v_in, 1, 0);
      wit.t_exponent_ = 1;
      wit.omega_exponent_ = dim_of(v_in) + 1;
      for (std::size_t j = 0; j < m; ++j) {
        const long lv = long(dim_image(config.projection(j), v_in)) + 1;
        wit.image_exponents_[j] = first ? lv : dim_of(v_in) + 1;
        wit.image_exponents_[j + m] = first ? dim_of(v_in) + 1 : lv;
      }
      break;
    }
    case WitnessKind::C1:
    case WitnessKind::C2: {
      // |x_V| <= R, |x_{V^perp}| <= 1, |y_{W^perp}| <= 1/R, |y_W| <= 1, |t| <= 1.
      need(v_in, "V");
      need(w_in, "W");
      const Subspace vperp = v_in.orthogonal_complement();
      if (!w_in.is_subspace_of(vperp)) throw InvalidInput("witness pair requires W to lie in the orthogonal complement of V");
      const Subspace wperp = w_in.orthogonal_complement();
      const int sign = kind == WitnessKind::C2 ? 1 : -1;
      wit.parameter_ = kind == WitnessKind::C2 ? "R" : "1/R";
      wit.v_ = v_in;
      wit.w_ = w_in;
      wit.x_blocks_ = split(v_in, sign, 0);
      wit.y_blocks_ = split(wperp, -sign, 0);
      wit.t_exponent_ = 0;
      wit.upper_bounds_ = true;
      const long dwp = dim_of(wperp);
      wit.omega_exponent_ = sign * (dim_of(v_in) - dwp);
      for (std::size_t j = 0; j < m; ++j) {
        const auto& l = config.projection(j);
        const long nj = long(config.rank(j));
        if (kind == WitnessKind::C2) {
          wit.image_exponents_[j] = long(dim_image(l, v_in)) - dwp;
          wit.image_exponents_[j + m] = dim_of(v_in) - (nj - long(dim_image(l, w_in)));
        } else {
          // Exponents in R as R -> 0, negated for the parameter 1/R.
          const long ej = (nj - long(dim_image(l, vperp))) - dwp;
          const long ejm = dim_of(v_in) - long(dim_image(l, wperp));
          wit.image_exponents_[j] = -ej;
          wit.image_exponents_[j + m] = -ejm;
        }
      }
      break;
    }
  }
  return wit;
}

WitnessBox BoxWitness::instantiate(double parameter) const {
  if (!(parameter > 0) || !std::isfinite(parameter)) throw InvalidInput("witness parameter must be positive and finite");
  WitnessBox box;
  auto fill = [&](const std::vector<WitnessBlock>& blocks, std::vector<std::vector<double>>& basis,
                  std::vector<double>& lo, std::vector<double>& hi) {
    for (const auto& b : blocks) {
      const double s = std::pow(parameter, b.exponent);
      for (auto& u : orthonormal_basis(b.span)) {
        basis.push_back(std::move(u));
        lo.push_back(-s);
        hi.push_back(s);
      }
    }
  };
  fill(x_blocks_, box.x_basis, box.x_lo, box.x_hi);
  fill(y_blocks_, box.y_basis, box.y_lo, box.y_hi);
  const double st = std::pow(parameter, t_exponent_);
  box.t_lo = -st;
  box.t_hi = st;
  return box;
}

std::string BoxWitness::description() const {
  auto scale = [&](int e) -> std::string {
    if (e == 0) return "1";
    if (parameter_ == "1/R" && (e == 1 || e == -1)) return e == 1 ? "1/R" : "R";
    return e == 1 ? parameter_ : parameter_ + "^" + std::to_string(e);
  };
  std::string out;
  auto add = [&](const char* var, const std::vector<WitnessBlock>& blocks) {
    for (const auto& b : blocks) {
      if (!out.empty()) out += ", ";
      out += std::string("|") + var + " in " + b.span.label() + "| <= " + scale(b.exponent);
    }
  };
  add("x", x_blocks_);
  add("y", y_blocks_);
  out += ", |t| <= " + scale(t_exponent_);
  return out;
}

}  // namespace heisbl
