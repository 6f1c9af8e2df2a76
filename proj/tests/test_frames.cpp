#include <doctest.h>

#include "heisbl/errors.hpp"
#include "heisbl/frames.hpp"
#include "heisbl/geometry.hpp"
#include "support.hpp"

using namespace heisbl;
using heisbl::testing::q_of;

namespace {

Subspace coord(std::size_t n, std::vector<std::size_t> idx) { return CoordinateSubspace(n, std::move(idx)).to_subspace(); }

const ProjectionConfig lw_h2(2, {coord(2, {0}), coord(2, {1})});
const ProjectionConfig skewed_h2(2, {coord(2, {1}), Subspace::span(2, {{1, 1}})});

std::vector<std::pair<std::size_t, std::size_t>> one_based(std::vector<std::pair<std::size_t, std::size_t>> v) {
  for (auto& [a, b] : v) ++a, ++b;
  return v;
}

/// Codimension-one configs in R^n: m = n random hyperplanes.
ProjectionConfig random_hyperplanes(std::mt19937_64& rng, std::size_t n) {
  std::vector<Subspace> subs;
  while (subs.size() < n) {
    const Subspace line = heisbl::testing::random_subspace(rng, n, 1);
    if (line.dim() == 1) subs.push_back(line.orthogonal_complement());
  }
  return ProjectionConfig(n, subs);
}

}  // namespace

TEST_CASE("fields of the skewed configuration") {
  const auto fields = tangent_fields(skewed_h2);
  REQUIRE(fields.size() == 4);
  CHECK(fields[0].describe() == "d/dx1 - 1/2 y1 d/dt");
  CHECK(fields[3].side == Side::Y);
  CHECK(lie_bracket(fields[0], fields[1]) == 0);
  CHECK(lie_bracket(fields[0], fields[2]) != 0);
}

TEST_CASE("brackets are antisymmetric and vanish on one side") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto cfg = random_hyperplanes(rng, n);
    const auto fields = tangent_fields(cfg);
    for (const auto& a : fields)
      for (const auto& b : fields) {
        CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
        if (a.side == b.side) CHECK(lie_bracket(a, b) == 0);
      }
  }
}

TEST_CASE("each field is tangent to the fibers of its projection") {
  // pi_j is quadratic, so the symmetric difference quotient is its exact
  // directional derivative.
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const auto cfg = random_hyperplanes(rng, n);
    const auto maps = vertical_projections(cfg, {});
    const auto fields = tangent_fields(cfg);
    const HeisenbergPoint<Rational> p{heisbl::testing::random_vector(rng, n), heisbl::testing::random_vector(rng, n),
                                      heisbl::testing::random_rational(rng)};
    for (const auto& f : fields) {
      RationalVector xy(p.x);
      xy.insert(xy.end(), p.y.begin(), p.y.end());
      const Rational dt = dot(f.t_linear, xy) + f.t_constant;
      auto moved = [&](const Rational& s) {
        HeisenbergPoint<Rational> q = p;
        for (std::size_t i = 0; i < n; ++i) {
          q.x[i] += s * f.spatial[i];
          q.y[i] += s * f.spatial[n + i];
        }
        q.t += s * dt;
        return maps[f.index].apply(q);
      };
      const auto plus = moved(1), minus = moved(-1);
      CHECK(plus == minus);
    }
  }
}

TEST_CASE("frame pairs and extreme points on the worked examples") {
  CHECK(one_based(frame_pairs(skewed_h2)) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
  std::set<RationalVector> pts;
  for (const auto& q : frame_extreme_points(skewed_h2)) pts.insert(q.values());
  CHECK(pts == std::set<RationalVector>{q_of({"2/5", "1/5", "2/5", "1/5"}), q_of({"2/5", "1/5", "1/5", "2/5"}),
                                        q_of({"1/5", "2/5", "2/5", "1/5"}), q_of({"1/5", "2/5", "1/5", "2/5"})});
  CHECK(one_based(frame_pairs(lw_h2)) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}});
  CHECK(is_worked_example(lw_h2));
  CHECK(is_worked_example(skewed_h2));
  CHECK_FALSE(analyze_frames(skewed_h2).conjectural);
}

TEST_CASE("configs outside the worked examples are flagged conjectural") {
  const ProjectionConfig radon(1, {Subspace::zero(1)});
  const auto r = analyze_frames(radon);
  CHECK(r.conjectural);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].values() == q_of({"2/3", "2/3"}));
}

TEST_CASE("the codimension-one precondition is enforced") {
  CHECK_THROWS_AS(require_codimension_one(ProjectionConfig(2, {coord(2, {0})})), InvalidInput);
  CHECK_THROWS_AS(require_codimension_one(ProjectionConfig(2, {coord(2, {}), coord(2, {1})})), InvalidInput);
  CHECK_THROWS_AS(analyze_frames(ProjectionConfig(1, {Subspace::full(1)})), InvalidInput);
  CHECK_NOTHROW(require_codimension_one(lw_h2));
}
