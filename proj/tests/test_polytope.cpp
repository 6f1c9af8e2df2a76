#include <doctest.h>

#include "heisbl/errors.hpp"
#include "heisbl/polytope.hpp"
#include "support.hpp"

using namespace heisbl;
using heisbl::testing::as_set;
using heisbl::testing::q_of;

namespace {

LinearConstraint row(RationalVector a, Relation r, Rational b) {
  LinearConstraint c;
  c.coeffs = std::move(a);
  c.relation = r;
  c.rhs = std::move(b);
  return c;
}

Subspace coord(std::size_t n, std::vector<std::size_t> idx) { return CoordinateSubspace(n, std::move(idx)).to_subspace(); }

}  // namespace

TEST_CASE("unit square and a simplex") {
  const HPolytope square(2, {});
  CHECK(enumerate_vertices(square).vertices.size() == 4);
  CHECK(affine_dimension(square) == 2);

  const HPolytope simplex(3, {row({1, 1, 1}, Relation::Le, 1)});
  const auto v = enumerate_vertices(simplex);
  CHECK(v.vertices == std::vector<RationalVector>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(affine_dimension(v) == 3);
}

TEST_CASE("equalities cut lower-dimensional faces") {
  const HPolytope segment(2, {row({1, 1}, Relation::Eq, 1)});
  const auto v = enumerate_vertices(segment);
  CHECK(v.vertices == std::vector<RationalVector>{{0, 1}, {1, 0}});
  CHECK(affine_dimension(v) == 1);

  const HPolytope point(2, {row({1, 1}, Relation::Eq, 1), row({1, -1}, Relation::Eq, 0)});
  CHECK(enumerate_vertices(point).vertices == std::vector<RationalVector>{q_of({"1/2", "1/2"})});
  CHECK(affine_dimension(point) == 0);
}

TEST_CASE("infeasible systems are empty") {
  const HPolytope h(2, {row({1, 1}, Relation::Ge, 3)});
  CHECK(enumerate_vertices(h).empty());
  CHECK(brute_force_vertices(h).empty());
  CHECK(affine_dimension(h) == -1);
  const HPolytope inconsistent(2, {row({1, 0}, Relation::Eq, Rational(1, 2)), row({2, 0}, Relation::Eq, 2)});
  CHECK(enumerate_vertices(inconsistent).empty());
}

TEST_CASE("membership reports violated rows") {
  const auto cfg = ProjectionConfig(2, {coord(2, {1}), Subspace::span(2, {{1, 1}})});
  const auto sys = build_system(cfg, default_family(cfg), Mode::Sufficient);
  const auto h = HPolytope::from_system(sys);
  const auto in = contains(h, q_of({"1/5", "2/5", "1/5", "2/5"}));
  CHECK(in.inside);
  CHECK(in.violated.empty());
  const auto out = contains(h, q_of({"1/5", "2/5", "2/5", "1/5"}));
  CHECK_FALSE(out.inside);
  REQUIRE_FALSE(out.violated.empty());
  for (auto i : out.violated) CHECK(h.constraints()[i].tag.kind == TagKind::C);
  CHECK_THROWS_AS(contains(h, q_of({"1/5"})), InvalidInput);
}

TEST_CASE("double description agrees with the subset oracle on random systems") {
  std::mt19937_64 rng(2024);
  int nonempty = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 2 + rng() % 5;
    const std::size_t count = 1 + rng() % 12;
    const HPolytope h = heisbl::testing::random_system(rng, d, count);
    const auto dd = enumerate_vertices(h);
    CHECK(as_set(dd) == as_set(brute_force_vertices(h)));
    nonempty += !dd.empty();
    for (const auto& v : dd.vertices) CHECK(contains(h, v).inside);
  }
  CHECK(nonempty > 30);
}

TEST_CASE("vertex sets do not depend on constraint order") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const HPolytope h = heisbl::testing::random_system(rng, 4, 8);
    auto rows = h.constraints();
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(as_set(enumerate_vertices(h)) == as_set(enumerate_vertices(HPolytope(4, rows))));
  }
}

TEST_CASE("the oracle refuses oversized systems") {
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(brute_force_vertices(heisbl::testing::random_system(rng, 9, 3)), InvalidInput);
  CHECK_THROWS_AS(brute_force_vertices(heisbl::testing::random_system(rng, 3, 41)), InvalidInput);
}
