#include <doctest.h>

#include "heisbl/conditions.hpp"
#include "heisbl/errors.hpp"
#include "support.hpp"

using namespace heisbl;
using heisbl::testing::q_of;

namespace {

Subspace coord(std::size_t n, std::vector<std::size_t> idx) { return CoordinateSubspace(n, std::move(idx)).to_subspace(); }

ProjectionConfig lw_h2() { return ProjectionConfig(2, {coord(2, {0}), coord(2, {1})}); }
ProjectionConfig skewed_h2() { return ProjectionConfig(2, {coord(2, {1}), Subspace::span(2, {{1, 1}})}); }

std::set<Halfspace> halfspaces(const std::vector<LinearConstraint>& cs) {
  std::set<Halfspace> out;
  for (const auto& c : cs)
    for (auto& h : normalize(c)) out.insert(h);
  return out;
}

std::vector<std::string> labels(const std::vector<Subspace>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(v.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("reciprocal vectors") {
  const auto q = ReciprocalVector::from_exponents({"5/2", "inf", "1", "5"});
  CHECK(q.values() == q_of({"2/5", "0", "1", "1/5"}));
  CHECK(q.exponent_strings() == std::vector<std::string>{"5/2", "inf", "1", "5"});
  CHECK_THROWS_AS(ReciprocalVector::from_exponents({"1/2"}), InvalidInput);
  CHECK_THROWS_AS(ReciprocalVector::parse({"3/2"}), InvalidInput);
  CHECK_THROWS_AS(ReciprocalVector::parse({"-1/2"}), InvalidInput);
}

TEST_CASE("scaling constraints on Loomis-Whitney H^2") {
  const auto a = constraint_A(lw_h2());
  CHECK(a[0].coeffs == q_of({"2", "2", "3", "3"}));
  CHECK(a[0].rhs == 3);
  CHECK(a[1].coeffs == q_of({"3", "3", "2", "2"}));
  CHECK(a[0].relation == Relation::Eq);
}

TEST_CASE("B and C constraints for coordinate lines") {
  const auto cfg = lw_h2();
  const auto b = constraint_B(cfg, coord(2, {0}));
  CHECK(b[0].coeffs == q_of({"2", "1", "2", "2"}));
  CHECK(b[1].coeffs == q_of({"2", "2", "2", "1"}));
  CHECK(b[0].rhs == 2);
  const auto c = constraint_C(cfg, coord(2, {1}));
  CHECK(c.coeffs == q_of({"1", "0", "-1", "0"}));
  CHECK(c.relation == Relation::Eq);
}

TEST_CASE("C1 and C2 reject pairs outside the complement") {
  const auto cfg = lw_h2();
  CHECK_THROWS_AS(constraint_C1_C2(cfg, coord(2, {0}), coord(2, {0})), InvalidInput);
  CHECK_NOTHROW(constraint_C1_C2(cfg, coord(2, {0}), coord(2, {1})));
  CHECK_NOTHROW(constraint_C1_C2(cfg, coord(2, {0}), Subspace::zero(2)));
}

TEST_CASE("constraint coefficients are integers") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
    std::vector<Subspace> subs;
    for (std::size_t j = 0; j < m; ++j) subs.push_back(heisbl::testing::random_subspace(rng, n, rng() % (n + 1)));
    const ProjectionConfig cfg(n, subs);
    for (Mode mode : {Mode::Sufficient, Mode::Necessary}) {
      const auto sys = build_system(cfg, default_family(cfg), mode);
      for (const auto& c : sys.constraints) {
        for (const auto& x : c.coeffs) CHECK(x.get_den() == 1);
        CHECK(c.rhs.get_den() == 1);
      }
    }
  }
}

TEST_CASE("C1 and C2 collapse to C on coordinate data") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 3;
    const auto cfg = heisbl::testing::random_coordinate_config(rng, n, m);
    for (const auto& v : coordinate_subspaces(n)) {
      const auto pair = constraint_C1_C2(cfg, v, v.orthogonal_complement());
      CHECK(halfspaces({pair[0], pair[1]}) == halfspaces({constraint_C(cfg, v)}));
    }
  }
}

TEST_CASE("systems carry readable tags") {
  const auto sys = build_system(lw_h2(), coordinate_subspaces(2), Mode::Necessary);
  std::set<std::string> tags;
  for (const auto& c : sys.constraints) tags.insert(sys.tag_label(c.tag));
  CHECK(tags.count("A1"));
  CHECK(tags.count("B2(<e1>)"));
  CHECK(tags.count("C1(<e1>,<e2>)"));
  CHECK(tags.count("box(q4<=1)"));
  CHECK_FALSE(tags.count("C(<e1>)"));
  CHECK(sys.pairs.size() == 4);

  const auto all = build_system(lw_h2(), coordinate_subspaces(2), Mode::Necessary, PairPolicy::All);
  CHECK(all.pairs.size() > sys.pairs.size());
  CHECK_THROWS_AS(build_system(lw_h2(), {}, Mode::Sufficient), InvalidInput);
}

TEST_CASE("critical subspaces at the Loomis-Whitney vertices") {
  const auto cfg = lw_h2();
  const auto fam = coordinate_subspaces(2);
  const ReciprocalVector v1(q_of({"2/5", "1/5", "2/5", "1/5"}));
  const ReciprocalVector v2(q_of({"1/5", "2/5", "1/5", "2/5"}));
  CHECK(satisfies_A(cfg, v1));
  CHECK(labels(critical_subspaces(cfg, v1, fam)) == std::vector<std::string>{"<e2>", "R^2"});
  CHECK(labels(critical_subspaces(cfg, v2, fam)) == std::vector<std::string>{"<e1>", "R^2"});
  CHECK_FALSE(satisfies_A(cfg, ReciprocalVector(q_of({"1/2", "1/2", "1/2", "1/2"}))));
}

TEST_CASE("families") {
  CHECK(default_family(lw_h2()).size() == 4);
  const auto fam = default_family(skewed_h2());
  auto has = [&](const Subspace& s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
  CHECK(has(coord(2, {0})));                      // kernel of the first map
  CHECK(has(Subspace::span(2, {{1, -1}})));        // kernel of the second map
  CHECK(has(Subspace::zero(2)));
  CHECK(has(Subspace::full(2)));
  CHECK(std::is_sorted(fam.begin(), fam.end()));
  CHECK(skewed_h2().is_coordinate() == false);
  CHECK(lw_h2().is_coordinate());
}

TEST_CASE("modes parse") {
  CHECK(parse_mode("necessary") == Mode::Necessary);
  CHECK(parse_mode("sufficient") == Mode::Sufficient);
  CHECK_THROWS_AS(parse_mode("both"), InvalidInput);
}
