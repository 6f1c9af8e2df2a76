#pragma once

// Random inputs shared by the property tests and the acceptance binary.

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heisbl/conditions.hpp"
#include "heisbl/polytope.hpp"

namespace heisbl::testing {

inline std::string data_path(const std::string& name) { return std::string(HEISBL_TEST_DATA) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Rational random_rational(std::mt19937_64& rng, int range = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-range, range), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline RationalVector random_vector(std::mt19937_64& rng, std::size_t n, int range = 5, int max_den = 4) {
  RationalVector v(n);
  for (auto& x : v) x = random_rational(rng, range, max_den);
  return v;
}

/// m random coordinate subspaces of R^n (possibly {0} or R^n).
inline ProjectionConfig random_coordinate_config(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<Subspace> subs;
  std::uniform_int_distribution<unsigned> mask(0, (1u << n) - 1);
  for (std::size_t j = 0; j < m; ++j) {
    const unsigned bits = mask(rng);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (bits & (1u << i)) idx.push_back(i);
    subs.push_back(CoordinateSubspace(n, idx).to_subspace());
  }
  return ProjectionConfig(n, subs);
}

/// A subspace spanned by k random small-integer vectors.
inline Subspace random_subspace(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::vector<RationalVector> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n, 3, 1));
  return Subspace::span(n, gens);
}

/// Random inequality system in dimension d with `count` rows (box bounds are
/// added by HPolytope). Integer coefficients keep the oracle fast.
inline HPolytope random_system(std::mt19937_64& rng, std::size_t d, std::size_t count) {
  std::uniform_int_distribution<int> coef(-3, 3), rhs(-1, 4), rel(0, 9);
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < count; ++i) {
    LinearConstraint c;
    c.coeffs.resize(d);
    for (auto& x : c.coeffs) x = coef(rng);
    c.rhs = rhs(rng);
    const int r = rel(rng);
    c.relation = r == 0 ? Relation::Eq : r < 6 ? Relation::Le : Relation::Ge;
    rows.push_back(std::move(c));
  }
  return HPolytope(d, std::move(rows));
}

inline std::set<RationalVector> as_set(const VPolytope& v) { return {v.vertices.begin(), v.vertices.end()}; }

inline RationalVector q_of(std::initializer_list<const char*> items) {
  RationalVector q;
  for (const char* s : items) q.push_back(parse_rational(s));
  return q;
}

}  // namespace heisbl::testing
