#include "heisbl/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace heisbl {

HPolytope::HPolytope(std::size_t dim, std::vector<LinearConstraint> constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
  for (const auto& c : constraints_)
    if (c.coeffs.size() != dim_) throw InvalidInput("constraint length does not match polytope dimension");
  std::vector<bool> has_lo(dim_, false), has_hi(dim_, false);
  for (const auto& c : constraints_) {
    if (c.tag.kind == TagKind::BoxLower && c.tag.index < dim_) has_lo[c.tag.index] = true;
    if (c.tag.kind == TagKind::BoxUpper && c.tag.index < dim_) has_hi[c.tag.index] = true;
  }
  for (auto& b : box_constraints(dim_)) {
    const bool present = b.tag.kind == TagKind::BoxLower ? has_lo[b.tag.index] : has_hi[b.tag.index];
    if (!present) constraints_.push_back(std::move(b));
  }
}

HPolytope HPolytope::from_system(const ConstraintSystem& system) { return HPolytope(system.dim, system.constraints); }

Membership contains(const HPolytope& h, const RationalVector& q) {
  if (q.size() != h.dim()) throw InvalidInput("point dimension does not match polytope dimension");
  Membership out;
  for (std::size_t i = 0; i < h.constraints().size(); ++i)
    if (!h.constraints()[i].satisfied_by(q)) {
      out.inside = false;
      out.violated.push_back(i);
    }
  return out;
}

namespace {

// a.q <= b
struct Row {
  RationalVector a;
  Rational b;
};

void split_rows(const HPolytope& h, std::vector<Row>& eqs, std::vector<Row>& ineqs) {
  for (const auto& c : h.constraints()) {
    switch (c.relation) {
      case Relation::Eq: eqs.push_back({c.coeffs, c.rhs}); break;
      case Relation::Le: ineqs.push_back({c.coeffs, c.rhs}); break;
      case Relation::Ge: {
        Row r{c.coeffs, -c.rhs};
        for (auto& x : r.a) x = -x;
        ineqs.push_back(std::move(r));
        break;
      }
    }
  }
}

void sort_unique(std::vector<RationalVector>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  bool contains(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((o.words_[i] & ~words_[i]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  std::vector<Integer> v;
  Bitset zeros;
};

std::vector<Integer> integer_row(const RationalVector& r) {
  Integer l = 1;
  for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(r.size());
  for (const auto& x : r) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer idot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Extreme rays of the pointed cone {y : g.y >= 0 for all rows g}.
std::vector<Ray> cone_extreme_rays(const std::vector<std::vector<Integer>>& rows, std::size_t dim) {
  const std::size_t nrows = rows.size();

  // Initial simplicial cone from dim independent rows (row 0 first).
  std::vector<std::size_t> chosen;
  {
    std::vector<RationalVector> picked;
    for (std::size_t i = 0; i < nrows && chosen.size() < dim; ++i) {
      RationalVector r(rows[i].begin(), rows[i].end());
      picked.push_back(r);
      RationalMatrix m(picked.size(), dim);
      for (std::size_t a = 0; a < picked.size(); ++a)
        for (std::size_t b = 0; b < dim; ++b) m(a, b) = picked[a][b];
      if (rank(m) == picked.size())
        chosen.push_back(i);
      else
        picked.pop_back();
    }
  }
  if (chosen.size() < dim) throw InvalidInput("polytope is unbounded");

  RationalMatrix a0(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) a0(i, k) = rows[chosen[i]][k];
  const RationalMatrix inv = inverse(a0);

  std::vector<Ray> rays;
  for (std::size_t i = 0; i < dim; ++i) {
    Ray r{integer_row(inv.column(i)), Bitset(nrows)};
    make_primitive(r.v);
    for (std::size_t k = 0; k < dim; ++k)
      if (k != i) r.zeros.set(chosen[k]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> done(nrows, false);
  for (auto c : chosen) done[c] = true;
  std::size_t remaining = nrows - dim;

  while (remaining > 0) {
    // Insert the row with the smallest |plus| * |minus| next.
    std::size_t best = nrows;
    std::size_t best_cost = SIZE_MAX;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (done[i]) continue;
      std::size_t plus = 0, minus = 0;
      for (const auto& r : rays) {
        const int s = sgn(idot(rows[i], r.v));
        if (s > 0) ++plus;
        if (s < 0) ++minus;
      }
      const std::size_t cost = plus * minus + (minus > 0 ? 1 : 0);
      if (cost < best_cost) {
        best_cost = cost;
        best = i;
      }
    }
    const auto& g = rows[best];
    done[best] = true;
    --remaining;

    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = idot(g, rays[i].v);
      const int sg = sgn(s[i]);
      (sg > 0 ? plus : sg < 0 ? minus : zero).push_back(i);
    }
    if (minus.empty()) {
      for (auto i : zero) rays[i].zeros.set(best);
      continue;
    }

    std::vector<Ray> next;
    for (auto i : plus) next.push_back(rays[i]);
    for (auto i : zero) {
      next.push_back(rays[i]);
      next.back().zeros.set(best);
    }
    for (auto p : plus)
      for (auto n : minus) {
        const Bitset common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != n && rays[r].zeros.contains(common)) adjacent = false;
        if (!adjacent) continue;
        Ray nr{std::vector<Integer>(dim), common};
        for (std::size_t k = 0; k < dim; ++k) nr.v[k] = s[p] * rays[n].v[k] - s[n] * rays[p].v[k];
        make_primitive(nr.v);
        nr.zeros.set(best);
        next.push_back(std::move(nr));
      }
    rays = std::move(next);
    if (rays.empty()) break;
  }
  return rays;
}

}  // namespace

VPolytope enumerate_vertices(const HPolytope& h) {
  const std::size_t d = h.dim();
  std::vector<Row> eqs, ineqs;
  split_rows(h, eqs, ineqs);

  // Affine hull of the equalities: q = x0 + N z.
  RationalVector x0(d);
  RationalMatrix basis = RationalMatrix::identity(d);
  if (!eqs.empty()) {
    RationalMatrix e(eqs.size(), d);
    RationalVector rhs(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) e(i, k) = eqs[i].a[k];
      rhs[i] = eqs[i].b;
    }
    if (!solve(e, rhs, x0)) return {};
    basis = kernel(e);
  }
  const std::size_t k = basis.cols();

  VPolytope out;
  if (k == 0) {
    for (const auto& r : ineqs)
      if (dot(r.a, x0) > r.b) return {};
    out.vertices.push_back(x0);
    return out;
  }

  // Homogenized rows g.(z, lambda) >= 0 with g = (-a N, b - a.x0); lambda row first.
  std::vector<std::vector<Integer>> rows;
  {
    std::vector<Integer> lam(k + 1, Integer(0));
    lam[k] = 1;
    rows.push_back(std::move(lam));
  }
  for (const auto& r : ineqs) {
    RationalVector g(k + 1);
    bool zero = true;
    for (std::size_t c = 0; c < k; ++c) {
      Rational v = 0;
      for (std::size_t i = 0; i < d; ++i) v += r.a[i] * basis(i, c);
      g[c] = -v;
      if (v != 0) zero = false;
    }
    g[k] = r.b - dot(r.a, x0);
    if (zero) {
      if (g[k] < 0) return {};
      continue;
    }
    rows.push_back(integer_row(g));
  }

  const auto rays = cone_extreme_rays(rows, k + 1);
  for (const auto& r : rays) {
    if (sgn(r.v[k]) <= 0) continue;
    RationalVector q(x0);
    for (std::size_t c = 0; c < k; ++c) {
      Rational z(r.v[c], r.v[k]);
      z.canonicalize();
      for (std::size_t i = 0; i < d; ++i) q[i] += basis(i, c) * z;
    }
    for (auto& x : q) x.canonicalize();
    out.vertices.push_back(std::move(q));
  }
  sort_unique(out.vertices);
  return out;
}

namespace {

// Integer row (a | b) of the brute-force search, scaled to primitive form.
struct IntRow {
  std::vector<Integer> v;
  Relation rel = Relation::Le;
};

IntRow integer_row(const LinearConstraint& c) {
  Integer l = 1;
  for (const auto& x : c.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rhs.get_den_mpz_t());
  IntRow r;
  r.rel = c.relation;
  for (const auto& x : c.coeffs) r.v.push_back(Integer(x * l));
  r.v.push_back(Integer(c.rhs * l));
  make_primitive(r.v);
  return r;
}

struct EchelonRow {
  std::vector<Integer> r;
  std::size_t pivot;
};

// Fraction-free elimination against the earlier rows. Each stored row has a
// zero in every earlier row's pivot column.
bool reduce_into(std::vector<EchelonRow>& ech, std::vector<Integer> r) {
  const std::size_t d = r.size() - 1;
  for (const auto& e : ech) {
    if (sgn(r[e.pivot]) == 0) continue;
    const Integer f = r[e.pivot], g = e.r[e.pivot];
    for (std::size_t k = 0; k <= d; ++k) r[k] = g * r[k] - f * e.r[k];
    make_primitive(r);
  }
  std::size_t p = 0;
  while (p < d && sgn(r[p]) == 0) ++p;
  if (p == d) return false;
  ech.push_back({std::move(r), p});
  return true;
}

RationalVector back_substitute(const std::vector<EchelonRow>& ech, std::size_t d) {
  RationalVector x(d);
  for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
    Rational v = it->r[d];
    for (std::size_t k = 0; k < d; ++k)
      if (k != it->pivot && sgn(it->r[k]) != 0) v -= it->r[k] * x[k];
    v /= it->r[it->pivot];
    x[it->pivot] = std::move(v);
  }
  return x;
}

}  // namespace

VPolytope brute_force_vertices(const HPolytope& h) {
  const std::size_t d = h.dim();
  std::size_t non_box = 0;
  for (const auto& c : h.constraints())
    if (c.tag.kind != TagKind::BoxLower && c.tag.kind != TagKind::BoxUpper) ++non_box;
  if (d > 8 || non_box > 40) throw InvalidInput("brute-force oracle: instance too large");

  // Equalities first: they are tight at every vertex, so the search never
  // skips an independent one.
  std::vector<IntRow> rows;
  for (const auto& c : h.constraints()) rows.push_back(integer_row(c));
  std::stable_partition(rows.begin(), rows.end(), [](const IntRow& r) { return r.rel == Relation::Eq; });
  const std::size_t nrows = rows.size();
  {
    // C(nrows, d) guard.
    double subsets = 1;
    for (std::size_t i = 0; i < d; ++i) subsets = subsets * double(nrows - i) / double(i + 1);
    if (subsets > 5e7) throw InvalidInput("brute-force oracle: instance too large");
  }

  std::set<RationalVector> found;
  std::vector<EchelonRow> ech;
  std::vector<Integer> num(d);
  std::size_t last_violated = 0;
  auto violates = [&](const IntRow& row, const Integer& den) {
    Integer s = -row.v[d] * den;
    for (std::size_t k = 0; k < d; ++k)
      if (sgn(row.v[k]) != 0) s += row.v[k] * num[k];
    switch (row.rel) {
      case Relation::Eq: return sgn(s) != 0;
      case Relation::Le: return sgn(s) > 0;
      case Relation::Ge: return sgn(s) < 0;
    }
    return true;
  };
  auto feasible = [&](const RationalVector& x) {
    Integer den = 1;
    for (const auto& v : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t k = 0; k < d; ++k) num[k] = Integer(x[k] * den);
    // Rejections cluster on a few rows; try the most recent one first.
    if (violates(rows[last_violated], den)) return false;
    for (std::size_t i = 0; i < nrows; ++i)
      if (violates(rows[i], den)) {
        last_violated = i;
        return false;
      }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t start) -> void {
    if (ech.size() == d) {
      RationalVector x = back_substitute(ech, d);
      if (feasible(x)) found.insert(std::move(x));
      return;
    }
    for (std::size_t i = start; i + (d - ech.size()) <= nrows; ++i) {
      const std::size_t before = ech.size();
      if (!reduce_into(ech, rows[i].v)) continue;
      self(self, i + 1);
      ech.resize(before);
      if (rows[i].rel == Relation::Eq) break;
    }
  };
  if (d == 0) return {};
  dfs(dfs, 0);
  VPolytope out;
  out.vertices.assign(found.begin(), found.end());
  return out;
}

int affine_dimension(const VPolytope& v) {
  if (v.vertices.empty()) return -1;
  const std::size_t d = v.vertices.front().size();
  if (v.vertices.size() == 1) return 0;
  RationalMatrix diffs(v.vertices.size() - 1, d);
  for (std::size_t i = 1; i < v.vertices.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) diffs(i - 1, k) = v.vertices[i][k] - v.vertices[0][k];
  return static_cast<int>(rank(diffs));
}

int affine_dimension(const HPolytope& h) { return affine_dimension(enumerate_vertices(h)); }

}  // namespace heisbl
