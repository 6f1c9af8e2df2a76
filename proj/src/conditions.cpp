#include "heisbl/conditions.hpp"

#include <algorithm>
#include <set>

namespace heisbl {

ProjectionConfig::ProjectionConfig(std::size_t n, std::vector<Subspace> subspaces)
    : n_(n), subspaces_(std::move(subspaces)) {
  if (n_ == 0) throw InvalidInput("ambient dimension n must be positive");
  if (subspaces_.empty()) throw InvalidInput("at least one projection is required");
  for (std::size_t j = 0; j < subspaces_.size(); ++j) {
    if (subspaces_[j].ambient_dim() != n_)
      throw InvalidInput("projection " + std::to_string(j + 1) + " has ambient dimension " +
                         std::to_string(subspaces_[j].ambient_dim()) + ", expected " + std::to_string(n_));
    projections_.push_back(orthogonal_projection(subspaces_[j]));
    complements_.push_back(RationalMatrix::identity(n_) - projections_.back());
  }
}

bool ProjectionConfig::is_coordinate() const {
  return std::all_of(subspaces_.begin(), subspaces_.end(), [](const Subspace& v) { return v.is_coordinate(); });
}

ProjectionConfig ProjectionConfig::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != m()) throw InvalidInput("permutation length mismatch");
  std::vector<Subspace> vs;
  for (auto p : perm) vs.push_back(subspaces_.at(p));
  return ProjectionConfig(n_, std::move(vs));
}

// ---------------------------------------------------------------------------

ReciprocalVector::ReciprocalVector(RationalVector q) : q_(std::move(q)) {
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (q_[i] < 0 || q_[i] > 1)
      throw InvalidInput("q_" + std::to_string(i + 1) + " = " + q_[i].get_str() + " is outside [0, 1]");
}

ReciprocalVector ReciprocalVector::from_exponents(const std::vector<std::string>& p) {
  RationalVector q;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == "inf" || p[i] == "Inf" || p[i] == "infinity") {
      q.emplace_back(0);
      continue;
    }
    const Rational v = parse_rational(p[i]);
    if (v < 1) throw InvalidInput("p_" + std::to_string(i + 1) + " = " + p[i] + " is below 1");
    q.push_back(Rational(1) / v);
  }
  return ReciprocalVector(std::move(q));
}

ReciprocalVector ReciprocalVector::parse(const std::vector<std::string>& q) {
  RationalVector v;
  for (const auto& s : q) v.push_back(parse_rational(s));
  return ReciprocalVector(std::move(v));
}

std::vector<std::string> ReciprocalVector::exponent_strings() const {
  std::vector<std::string> out;
  for (const auto& x : q_) out.push_back(x == 0 ? std::string("inf") : Rational(Rational(1) / x).get_str());
  return out;
}

// ---------------------------------------------------------------------------

Rational LinearConstraint::lhs(const RationalVector& q) const { return dot(coeffs, q); }

bool LinearConstraint::satisfied_by(const RationalVector& q) const {
  const Rational v = lhs(q);
  switch (relation) {
    case Relation::Eq: return v == rhs;
    case Relation::Le: return v <= rhs;
    case Relation::Ge: return v >= rhs;
  }
  return false;
}

bool LinearConstraint::tight_at(const RationalVector& q) const { return lhs(q) == rhs; }

bool Halfspace::operator<(const Halfspace& o) const {
  if (coeffs != o.coeffs) return coeffs < o.coeffs;
  return rhs < o.rhs;
}

namespace {

Halfspace make_halfspace(const RationalVector& a, const Rational& b) {
  RationalVector row(a);
  row.push_back(b);
  Integer l = 1;
  for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  Integer g = 0;
  std::vector<Integer> ints;
  for (const auto& x : row) {
    ints.push_back(x.get_num() * (l / x.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& v : ints) v /= g;
  Halfspace h;
  h.rhs = ints.back();
  ints.pop_back();
  h.coeffs = std::move(ints);
  return h;
}

RationalVector negated(const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

}  // namespace

std::vector<Halfspace> normalize(const LinearConstraint& c) {
  const bool all_zero = std::all_of(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x == 0; });
  std::vector<Halfspace> out;
  auto add = [&](const RationalVector& a, const Rational& b) {
    if (all_zero && b >= 0) return;  // vacuous
    out.push_back(make_halfspace(a, b));
  };
  switch (c.relation) {
    case Relation::Le: add(c.coeffs, c.rhs); break;
    case Relation::Ge: add(negated(c.coeffs), -c.rhs); break;
    case Relation::Eq:
      add(c.coeffs, c.rhs);
      add(negated(c.coeffs), -c.rhs);
      break;
  }
  return out;
}

const char* to_string(Mode mode) { return mode == Mode::Necessary ? "necessary" : "sufficient"; }

Mode parse_mode(const std::string& text) {
  if (text == "necessary") return Mode::Necessary;
  if (text == "sufficient") return Mode::Sufficient;
  throw InvalidInput("mode must be 'necessary' or 'sufficient', got '" + text + "'");
}

std::string ConstraintSystem::tag_label(const ConstraintTag& tag) const {
  auto fam = [&](std::size_t i) { return i < family.size() ? family[i].label() : std::string("?"); };
  auto pair = [&](std::size_t i) {
    return i < pairs.size() ? pairs[i].first.label() + "," + pairs[i].second.label() : std::string("?");
  };
  switch (tag.kind) {
    case TagKind::A1: return "A1";
    case TagKind::A2: return "A2";
    case TagKind::B1: return "B1(" + fam(tag.index) + ")";
    case TagKind::B2: return "B2(" + fam(tag.index) + ")";
    case TagKind::C: return "C(" + fam(tag.index) + ")";
    case TagKind::C1: return "C1(" + pair(tag.index) + ")";
    case TagKind::C2: return "C2(" + pair(tag.index) + ")";
    case TagKind::BoxLower: return "box(q" + std::to_string(tag.index + 1) + ">=0)";
    case TagKind::BoxUpper: return "box(q" + std::to_string(tag.index + 1) + "<=1)";
    case TagKind::Custom: return "custom(" + std::to_string(tag.index) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::array<LinearConstraint, 2> constraint_A(const ProjectionConfig& config) {
  const std::size_t m = config.m(), n = config.n();
  std::array<LinearConstraint, 2> out;
  for (int which = 0; which < 2; ++which) {
    LinearConstraint c;
    c.coeffs.assign(2 * m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      const Rational low = config.rank(j) + 1, high = n + 1;
      c.coeffs[j] = which == 0 ? low : high;
      c.coeffs[j + m] = which == 0 ? high : low;
    }
    c.rhs = n + 1;
    c.relation = Relation::Eq;
    c.tag = {which == 0 ? TagKind::A1 : TagKind::A2, 0};
    out[which] = std::move(c);
  }
  return out;
}

std::array<LinearConstraint, 2> constraint_B(const ProjectionConfig& config, const Subspace& v,
                                             std::size_t family_index) {
  if (v.ambient_dim() != config.n()) throw InvalidInput("constraint_B: subspace ambient dimension mismatch");
  const std::size_t m = config.m();
  const Rational dv = v.dim();
  std::array<LinearConstraint, 2> out;
  for (int which = 0; which < 2; ++which) {
    LinearConstraint c;
    c.coeffs.assign(2 * m, Rational(0));
    for (std::size_t j = 0; j < m; ++j) {
      const Rational img = dim_image(config.projection(j), v) + 1;
      c.coeffs[j] = which == 0 ? img : dv + 1;
      c.coeffs[j + m] = which == 0 ? dv + 1 : img;
    }
    c.rhs = dv + 1;
    c.relation = Relation::Ge;
    c.tag = {which == 0 ? TagKind::B1 : TagKind::B2, family_index};
    out[which] = std::move(c);
  }
  return out;
}

LinearConstraint constraint_C(const ProjectionConfig& config, const Subspace& v, std::size_t family_index) {
  if (v.ambient_dim() != config.n()) throw InvalidInput("constraint_C: subspace ambient dimension mismatch");
  const std::size_t m = config.m();
  LinearConstraint c;
  c.coeffs.assign(2 * m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    const Rational d = Rational(v.dim()) - Rational(dim_image(config.projection(j), v));
    c.coeffs[j] = d;
    c.coeffs[j + m] = -d;
  }
  c.rhs = 0;
  c.relation = Relation::Eq;
  c.tag = {TagKind::C, family_index};
  return c;
}

std::array<LinearConstraint, 2> constraint_C1_C2(const ProjectionConfig& config, const Subspace& v,
                                                 const Subspace& w, std::size_t pair_index) {
  if (v.ambient_dim() != config.n() || w.ambient_dim() != config.n())
    throw InvalidInput("constraint_C1_C2: subspace ambient dimension mismatch");
  const Subspace v_perp = v.orthogonal_complement();
  if (!w.is_subspace_of(v_perp))
    throw InvalidInput("W = " + w.label() + " is not contained in the complement of V = " + v.label());
  const Subspace w_perp = w.orthogonal_complement();
  const std::size_t m = config.m();
  const Rational dim_w_perp = w_perp.dim(), dim_v = v.dim();

  LinearConstraint c1, c2;
  c1.coeffs.assign(2 * m, Rational(0));
  c2.coeffs.assign(2 * m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    const RationalMatrix& l = config.projection(j);
    const Subspace& vj = config.subspace(j);
    // Complements of images of L_j are taken inside the codomain V_j.
    const Rational perp_img_v_perp = complement_in(image(l, v_perp), vj).dim();
    const Rational perp_img_w = complement_in(image(l, w), vj).dim();
    const Rational img_v = dim_image(l, v);
    const Rational img_w_perp = dim_image(l, w_perp);
    c1.coeffs[j] = dim_w_perp - perp_img_v_perp;
    c1.coeffs[j + m] = img_w_perp - dim_v;
    c2.coeffs[j] = dim_w_perp - img_v;
    c2.coeffs[j + m] = perp_img_w - dim_v;
  }
  c1.rhs = c2.rhs = dim_w_perp - dim_v;
  c1.relation = Relation::Ge;
  c2.relation = Relation::Le;
  c1.tag = {TagKind::C1, pair_index};
  c2.tag = {TagKind::C2, pair_index};
  return {std::move(c1), std::move(c2)};
}

std::vector<LinearConstraint> box_constraints(std::size_t dim) {
  std::vector<LinearConstraint> out;
  for (std::size_t j = 0; j < dim; ++j) {
    LinearConstraint lo, hi;
    lo.coeffs.assign(dim, Rational(0));
    lo.coeffs[j] = 1;
    lo.rhs = 0;
    lo.relation = Relation::Ge;
    lo.tag = {TagKind::BoxLower, j};
    hi.coeffs = lo.coeffs;
    hi.rhs = 1;
    hi.relation = Relation::Le;
    hi.tag = {TagKind::BoxUpper, j};
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
  }
  return out;
}

namespace {

void dedupe(std::vector<Subspace>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace

std::vector<Subspace> heuristic_family(const ProjectionConfig& config, const std::vector<Subspace>& extra, int depth) {
  const std::size_t n = config.n();
  std::vector<Subspace> family{Subspace::zero(n), Subspace::full(n)};
  for (std::size_t j = 0; j < config.m(); ++j) {
    family.push_back(config.subspace(j));
    family.push_back(config.kernel(j));
  }
  for (const auto& v : extra) {
    if (v.ambient_dim() != n) throw InvalidInput("family member " + v.label() + " has the wrong ambient dimension");
    family.push_back(v);
  }
  dedupe(family);
  for (int round = 0; round < depth; ++round) {
    const std::size_t before = family.size();
    std::vector<Subspace> next(family);
    for (std::size_t a = 0; a < before; ++a)
      for (std::size_t b = a + 1; b < before; ++b) {
        next.push_back(sum(family[a], family[b]));
        next.push_back(intersect(family[a], family[b]));
      }
    dedupe(next);
    family = std::move(next);
    if (family.size() == before) break;
  }
  return family;
}

std::vector<Subspace> default_family(const ProjectionConfig& config, int depth) {
  if (config.is_coordinate()) return coordinate_subspaces(config.n());
  return heuristic_family(config, {}, depth);
}

ConstraintSystem build_system(const ProjectionConfig& config, const std::vector<Subspace>& family, Mode mode,
                              PairPolicy pairs) {
  if (family.empty()) throw InvalidInput("subspace family is empty");
  for (const auto& v : family)
    if (v.ambient_dim() != config.n())
      throw InvalidInput("family member " + v.label() + " has ambient dimension " + std::to_string(v.ambient_dim()) +
                         ", expected " + std::to_string(config.n()));

  ConstraintSystem sys;
  sys.dim = 2 * config.m();
  sys.mode = mode;
  sys.family = family;
  for (auto& c : constraint_A(config)) sys.constraints.push_back(std::move(c));
  for (std::size_t i = 0; i < family.size(); ++i)
    for (auto& c : constraint_B(config, family[i], i)) sys.constraints.push_back(std::move(c));

  if (mode == Mode::Sufficient) {
    for (std::size_t i = 0; i < family.size(); ++i) sys.constraints.push_back(constraint_C(config, family[i], i));
  } else {
    for (const auto& v : family) {
      const Subspace v_perp = v.orthogonal_complement();
      if (pairs == PairPolicy::Complement) {
        sys.pairs.emplace_back(v, v_perp);
        continue;
      }
      for (const auto& w : family)
        if (w.is_subspace_of(v_perp)) sys.pairs.emplace_back(v, w);
    }
    for (std::size_t i = 0; i < sys.pairs.size(); ++i)
      for (auto& c : constraint_C1_C2(config, sys.pairs[i].first, sys.pairs[i].second, i))
        sys.constraints.push_back(std::move(c));
  }
  for (auto& c : box_constraints(sys.dim)) sys.constraints.push_back(std::move(c));
  return sys;
}

bool satisfies_A(const ProjectionConfig& config, const ReciprocalVector& q) {
  if (q.size() != 2 * config.m()) throw InvalidInput("q has the wrong length");
  for (const auto& c : constraint_A(config))
    if (!c.satisfied_by(q.values())) return false;
  return true;
}

std::vector<Subspace> critical_subspaces(const ProjectionConfig& config, const ReciprocalVector& q,
                                         const std::vector<Subspace>& family) {
  if (q.size() != 2 * config.m()) throw InvalidInput("q has the wrong length");
  std::vector<Subspace> out;
  for (const auto& v : family) {
    const auto b = constraint_B(config, v);
    if (b[0].tight_at(q.values()) && b[1].tight_at(q.values())) out.push_back(v);
  }
  return out;
}

}  // namespace heisbl
