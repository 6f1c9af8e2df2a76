#include "heisbl/frames.hpp"

#include <set>

namespace heisbl {

namespace {

RationalVector kernel_direction(RationalVector v) {
  v = primitive(v);
  for (const auto& c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& x : v) x = -x;
    break;
  }
  return v;
}

std::string term(const Rational& c, const std::string& name, bool first) {
  std::string s;
  if (c < 0)
    s = first ? "-" : " - ";
  else if (!first)
    s = " + ";
  const Rational a = abs(c);
  if (a != 1 || name.empty()) s += to_string(a) + (name.empty() ? "" : " ");
  return s + name;
}

}  // namespace

std::string TangentField::describe() const {
  const std::size_t n = spatial.size() / 2;
  auto coord = [&](std::size_t i) { return (i < n ? "x" : "y") + std::to_string(i % n + 1); };
  std::string out;
  for (std::size_t i = 0; i < spatial.size(); ++i)
    if (spatial[i] != 0) out += term(spatial[i], "d/d" + coord(i), out.empty());

  // dt coefficient: collect terms first to know whether it is a single factor.
  std::vector<std::pair<Rational, std::string>> parts;
  for (std::size_t i = 0; i < t_linear.size(); ++i)
    if (t_linear[i] != 0) parts.emplace_back(t_linear[i], coord(i));
  if (t_constant != 0) parts.emplace_back(t_constant, "");
  if (parts.empty()) return out.empty() ? "0" : out;
  if (parts.size() == 1) {
    const auto& [c, name] = parts.front();
    out += term(c, name.empty() ? "d/dt" : name + " d/dt", out.empty());
    return out;
  }
  std::string inner;
  for (const auto& [c, name] : parts) inner += term(c, name, inner.empty());
  out += (out.empty() ? "(" : " + (") + inner + ") d/dt";
  return out;
}

std::vector<TangentField> tangent_fields(const ProjectionConfig& config, const Offsets& offsets) {
  const std::size_t n = config.n();
  const std::size_t m = config.m();
  const auto maps = vertical_projections(config, offsets);
  std::vector<TangentField> out;
  for (std::size_t idx = 0; idx < 2 * m; ++idx) {
    const auto& pi = maps[idx];
    for (const auto& raw : config.kernel(idx % m).orthogonal_basis()) {
      const RationalVector v = kernel_direction(raw);
      TangentField f;
      f.index = idx;
      f.side = pi.side();
      f.spatial.assign(2 * n, Rational(0));
      f.t_linear.assign(2 * n, Rational(0));
      // v lies in V_j^perp, so v.(L^y + b) = v.y + v.b.
      if (pi.side() == Side::X) {
        for (std::size_t i = 0; i < n; ++i) {
          f.spatial[i] = v[i];
          f.t_linear[n + i] = -v[i] / 2;
        }
        f.t_constant = -dot(v, pi.offset_b()) / 2;
      } else {
        for (std::size_t i = 0; i < n; ++i) {
          f.spatial[n + i] = v[i];
          f.t_linear[i] = v[i] / 2;
        }
        f.t_constant = dot(pi.offset_a(), v) / 2;
      }
      for (auto& c : f.t_linear) c.canonicalize();
      f.t_constant.canonicalize();
      out.push_back(std::move(f));
    }
  }
  return out;
}

Rational lie_bracket(const TangentField& x, const TangentField& y) {
  if (x.spatial.size() != y.spatial.size()) throw InvalidInput("lie_bracket: fields live in different dimensions");
  return dot(x.spatial, y.t_linear) - dot(y.spatial, x.t_linear);
}

void require_codimension_one(const ProjectionConfig& config) {
  if (config.m() != config.n())
    throw InvalidInput("frame analysis needs 2m = 2n fields (m = " + std::to_string(config.m()) +
                       ", n = " + std::to_string(config.n()) + ")");
  for (std::size_t j = 0; j < config.m(); ++j)
    if (config.rank(j) + 1 != config.n())
      throw InvalidInput("frame analysis needs every projection to have a one-dimensional kernel; projection " +
                         std::to_string(j + 1) + " has kernel dimension " + std::to_string(config.n() - config.rank(j)));
}

namespace {

bool spatial_spans(const std::vector<TangentField>& fields, std::size_t dim) {
  std::vector<RationalVector> cols;
  for (const auto& f : fields) cols.push_back(f.spatial);
  return rank(RationalMatrix::from_columns(dim, cols)) == dim;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> frame_pairs(const ProjectionConfig& config) {
  require_codimension_one(config);
  const auto fields = tangent_fields(config);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!spatial_spans(fields, 2 * config.n())) return out;
  for (std::size_t j = 0; j < fields.size(); ++j)
    for (std::size_t k = j + 1; k < fields.size(); ++k)
      if (lie_bracket(fields[j], fields[k]) != 0) out.emplace_back(fields[j].index, fields[k].index);
  return out;
}

std::vector<ReciprocalVector> frame_extreme_points(const ProjectionConfig& config) {
  const auto pairs = frame_pairs(config);
  const std::size_t dim = 2 * config.m();
  const Rational denom = long(2 * config.n() + 1);
  std::vector<ReciprocalVector> out;
  for (const auto& [j, k] : pairs) {
    RationalVector q(dim, 1 / denom);
    q[j] = 2 / denom;
    q[k] = 2 / denom;
    out.emplace_back(std::move(q));
  }
  return out;
}

bool is_worked_example(const ProjectionConfig& config) {
  if (config.n() != 2 || config.m() != 2) return false;
  const std::set<Subspace> have(config.subspaces().begin(), config.subspaces().end());
  const Subspace e1 = CoordinateSubspace(2, {0}).to_subspace();
  const Subspace e2 = CoordinateSubspace(2, {1}).to_subspace();
  const Subspace diag = Subspace::span(2, {{Rational(1), Rational(1)}});
  return have == std::set<Subspace>{e1, e2} || have == std::set<Subspace>{e2, diag};
}

FrameReport analyze_frames(const ProjectionConfig& config) {
  require_codimension_one(config);
  FrameReport r;
  r.fields = tangent_fields(config);
  for (std::size_t j = 0; j < r.fields.size(); ++j)
    for (std::size_t k = j + 1; k < r.fields.size(); ++k)
      r.brackets.push_back({r.fields[j].index, r.fields[k].index, lie_bracket(r.fields[j], r.fields[k])});
  r.spatial_span_full = spatial_spans(r.fields, 2 * config.n());
  r.pairs = frame_pairs(config);
  r.points = frame_extreme_points(config);
  r.conjectural = !is_worked_example(config);
  return r;
}

}  // namespace heisbl
