#include <doctest.h>

#include <cmath>

#include "heisbl/errors.hpp"
#include "heisbl/geometry.hpp"
#include "heisbl/measure.hpp"
#include "heisbl/montecarlo.hpp"
#include "heisbl/witness.hpp"
#include "support.hpp"

using namespace heisbl;
using heisbl::testing::random_vector;

namespace {

using QPoint = HeisenbergPoint<Rational>;

Subspace coord(std::size_t n, std::vector<std::size_t> idx) { return CoordinateSubspace(n, std::move(idx)).to_subspace(); }

QPoint random_point(std::mt19937_64& rng, std::size_t n) {
  return {random_vector(rng, n), random_vector(rng, n), heisbl::testing::random_rational(rng)};
}

QPoint point(RationalVector x, RationalVector y, Rational t) { return {std::move(x), std::move(y), std::move(t)}; }

const ProjectionConfig lw_h1(1, {Subspace::full(1)});
const ProjectionConfig radon_h1(1, {Subspace::zero(1)});
const ProjectionConfig lw_h2(2, {coord(2, {0}), coord(2, {1})});

}  // namespace

TEST_CASE("group law") {
  const QPoint p = point({1}, {0}, 0), q = point({0}, {1}, 0);
  CHECK(group_op(p, q) == point({1}, {1}, Rational(1, 2)));
  CHECK(group_op(q, p) == point({1}, {1}, Rational(-1, 2)));
  CHECK_THROWS_AS(group_op(p, heisenberg_identity<Rational>(2)), InvalidInput);
}

TEST_CASE("group axioms hold exactly on random points") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const QPoint a = random_point(rng, n), b = random_point(rng, n), c = random_point(rng, n);
    const QPoint e = heisenberg_identity<Rational>(n);
    CHECK(group_op(group_op(a, b), c) == group_op(a, group_op(b, c)));
    CHECK(group_op(a, e) == a);
    CHECK(group_op(e, a) == a);
    CHECK(group_op(a, group_inverse(a)) == e);
    CHECK(group_op(group_inverse(a), a) == e);
  }
}

TEST_CASE("vertical projections") {
  SUBCASE("full subspace is the identity") {
    const VerticalProjection pi(lw_h1, 0, Side::X);
    const QPoint p = point({3}, {5}, 7);
    CHECK(pi.apply(p) == RationalVector{3, 5, 7});
  }
  SUBCASE("coordinate line, x-side") {
    const ProjectionConfig cfg(2, {coord(2, {1})});
    const VerticalProjection pi(cfg, 0, Side::X);
    const QPoint p = point({2, 3}, {5, 7}, 1);
    CHECK(pi.apply(p) == RationalVector{3, 5, 7, 6});  // t + x1 y1 / 2
  }
  SUBCASE("diagonal line, y-side") {
    const ProjectionConfig cfg(2, {Subspace::span(2, {{1, 1}})});
    const VerticalProjection pi(cfg, 0, Side::Y);
    const QPoint p = point({2, 3}, {5, 9}, 1);
    // (x, (y1+y2)/2, t - (x1-x2)(y1-y2)/4)
    CHECK(pi.apply(p) == RationalVector{2, 3, 7, 0});
  }
  SUBCASE("offsets must lie in the kernel") {
    const ProjectionConfig cfg(2, {coord(2, {1})});
    CHECK_NOTHROW(VerticalProjection(cfg, 0, Side::X, {1, 0}, {2, 0}));
    CHECK_THROWS_AS(VerticalProjection(cfg, 0, Side::X, {0, 1}, {0, 0}), InvalidInput);
  }
}

TEST_CASE("projected block carries exactly L x") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const ProjectionConfig cfg(n, {heisbl::testing::random_subspace(rng, n, rng() % (n + 1))});
    for (Side side : {Side::X, Side::Y}) {
      const VerticalProjection pi(cfg, 0, side);
      const QPoint p = random_point(rng, n);
      const auto out = pi.apply(p);
      const RationalVector block(out.begin() + (side == Side::X ? 0 : std::ptrdiff_t(n)),
                                 out.begin() + (side == Side::X ? 0 : std::ptrdiff_t(n)) + std::ptrdiff_t(pi.block_dim()));
      CHECK(pi.block_vector(block) == cfg.projection(0).apply(side == Side::X ? p.x : p.y));
    }
  }
}

TEST_CASE("image measure of a unit cube under the L = 0 projection") {
  // |pi([0,1]^3)| = int_0^1 (1 + y/2) dy = 5/4.
  const VerticalProjection pi(radon_h1, 0, Side::X);
  const auto box = WitnessBox::axis_aligned({0}, {1}, {0}, {1}, 0, 1);
  const auto b = estimate_image_measure(pi, box);
  CHECK(b.lower <= 1.25);
  CHECK(b.upper >= 1.25);
  CHECK(b.upper - b.lower < 1e-6);
}

TEST_CASE("identity projection measures the box itself") {
  const VerticalProjection pi(lw_h1, 0, Side::Y);
  const auto box = WitnessBox::axis_aligned({-1}, {2}, {0}, {1}, -3, 3);
  const auto b = estimate_image_measure(pi, box);
  CHECK(b.lower <= 18.0);
  CHECK(b.upper >= 18.0);
  CHECK(estimate_image_measure(pi, WitnessBox::axis_aligned({0}, {0}, {0}, {1}, 0, 1)).upper == 0);
}

TEST_CASE("brackets are sound and refine monotonically") {
  // Twisted fibers on a symmetric box force the sign-changing path.
  const VerticalProjection pi(radon_h1, 0, Side::X);
  const auto box = WitnessBox::axis_aligned({0}, {1}, {-1}, {1}, 0, 1);
  double lo = 0, hi = INFINITY;
  for (double h : {1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 64}) {
    GridSpec g;
    g.h = h;
    const auto b = estimate_image_measure(pi, box, g);
    CHECK(b.lower <= b.upper);
    CHECK(b.lower >= lo - 1e-12);
    CHECK(b.upper <= hi + 1e-12);
    CHECK(b.lower <= 2.5);  // int_{-1}^1 (1 + |y|/2) dy
    CHECK(b.upper >= 2.5);
    lo = b.lower;
    hi = b.upper;
  }
  GridSpec tiny;
  tiny.h = 1.0 / 1024;
  tiny.budget = 10;
  CHECK_THROWS_AS(estimate_image_measure(pi, box, tiny), BudgetExceeded);
}

TEST_CASE("slope fits") {
  std::vector<double> r, m3, flat;
  for (int k = 1; k <= 5; ++k) {
    r.push_back(std::ldexp(1.0, k));
    m3.push_back(std::pow(r.back(), 3));
    flat.push_back(2.0);
  }
  CHECK(fit_scaling_exponent(r, m3) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fit_scaling_exponent(r, flat) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fit_scaling_exponent({1, 2, 3}, {1, 2, 3}), InvalidInput);
  CHECK_THROWS_AS(fit_scaling_exponent({1, 2, 3, 4}, {1, 0, 3, 4}), InvalidInput);
  CHECK(geometric_ladder(8, 2, 5) == std::vector<double>{8, 16, 32, 64, 128});
}

TEST_CASE("witness boxes") {
  const auto a1 = BoxWitness::make(lw_h2, WitnessKind::A1);
  CHECK(a1.omega_exponent() == 3);
  const auto box = a1.instantiate(4);
  CHECK(box.volume() == doctest::Approx(8.0 * 8 * 2 * 2 * 8));
  CHECK(a1.image_exponents() == std::vector<Rational>{2, 2, 3, 3});

  const auto b_full = BoxWitness::make(lw_h2, WitnessKind::B1, Subspace::full(2));
  CHECK(b_full.omega_exponent() == a1.omega_exponent());
  CHECK(b_full.image_exponents() == a1.image_exponents());

  const auto c = BoxWitness::make(lw_h2, WitnessKind::C2, coord(2, {0}), coord(2, {1}));
  CHECK(c.omega_exponent() == 0);
  CHECK(c.images_are_upper_bounds());
  CHECK_THROWS_AS(BoxWitness::make(lw_h2, WitnessKind::C1, coord(2, {0}), coord(2, {0})), InvalidInput);
}

TEST_CASE("witness slopes match their predicted exponents on H^1") {
  for (WitnessKind kind : {WitnessKind::A1, WitnessKind::A2, WitnessKind::B1, WitnessKind::B2}) {
    const auto w = BoxWitness::make(lw_h1, kind, Subspace::full(1));
    const auto t = witness_ladder(lw_h1, w, geometric_ladder(8, 2, 5));
    REQUIRE(t.complete);
    REQUIRE(t.omega_slope);
    CHECK(std::fabs(*t.omega_slope - w.omega_exponent().get_d()) <= 0.15);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::fabs(t.image_slopes[j] - w.image_exponents()[j].get_d()) <= 0.15);
  }
}

TEST_CASE("ratio sweep at a scaling-balanced exponent is flat") {
  const auto w = BoxWitness::make(lw_h2, WitnessKind::A1);
  const ReciprocalVector q(heisbl::testing::q_of({"2/5", "1/5", "2/5", "1/5"}));
  const auto s = rwt_ratio_sweep(lw_h2, q, w, geometric_ladder(8, 2, 5));
  CHECK(s.predicted_exponent == 0);
  CHECK(s.ratios.back() / s.ratios.front() == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("Monte Carlo form") {
  const BoxFunction f{false, {0, 0}, {1, 2}};
  SUBCASE("a zero factor kills the form") {
    const auto r = monte_carlo_form(radon_h1, {}, {f, BoxFunction::zero_function()});
    CHECK(r.estimate == 0);
    CHECK(r.standard_error == 0);
  }
  SUBCASE("closed form 7/4 within three standard errors") {
    const auto r = monte_carlo_form(radon_h1, {}, {f, f});
    CHECK(std::fabs(r.estimate - 1.75) <= 3 * r.standard_error);
  }
  SUBCASE("worker count does not change the estimate") {
    MonteCarloOptions o;
    o.samples = 200000;
    o.workers = 1;
    const double one = monte_carlo_form(radon_h1, {}, {f, f}, o).estimate;
    for (unsigned w : {2u, 4u, 8u}) {
      o.workers = w;
      CHECK(monte_carlo_form(radon_h1, {}, {f, f}, o).estimate == one);
    }
  }
  SUBCASE("user errors") {
    CHECK_THROWS_AS(monte_carlo_form(radon_h1, {}, {f}), InvalidInput);
    const BoxFunction open{false, {0, -INFINITY}, {1, 2}};
    CHECK_THROWS_AS(monte_carlo_form(radon_h1, {}, {open, open}), InvalidInput);
  }
}

TEST_CASE("dilations leave the endpoint ratio nearly constant") {
  const BoxFunction f{false, {0, 0}, {1, 2}};
  MonteCarloOptions o;
  o.samples = 200000;
  const ReciprocalVector q(heisbl::testing::q_of({"2/3", "2/3"}));
  const auto rows = dilation_sweep(radon_h1, {}, {f, f}, q, 4, o);
  REQUIRE(rows.size() == 5);
  double lo = INFINITY, hi = 0;
  for (const auto& r : rows) {
    lo = std::min(lo, r.ratio);
    hi = std::max(hi, r.ratio);
  }
  CHECK(hi / lo <= 1.05);
}
