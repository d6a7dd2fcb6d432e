#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcjlab/generators.hpp"
#include "lcjlab/lvar.hpp"
#include "lcjlab/rng.hpp"
#include "lcjlab/variation.hpp"

using namespace lcj;

namespace {

FiniteMetricSpace four_point_space() {
  return from_euclidean({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.5}, {2.0, 2.0}});
}

StepCurve random_curve(std::size_t n_points, std::size_t length, Rng& rng) {
  StepCurve c;
  for (std::size_t i = 0; i < length; ++i) c.points.push_back(rng.next_index(0, n_points - 1));
  return c;
}

}  // namespace

TEST_CASE("var_of_curve") {
  FiniteMetricSpace s = four_point_space();
  CHECK_EQ(var_of_curve(s, StepCurve{{2, 2, 2}}), 0.0);

  StaircasePoints stair = staircase_curve(5);
  FiniteMetricSpace ss = from_euclidean(stair.points);
  StepCurve c;
  for (std::size_t i = 0; i <= 5; ++i) c.points.push_back(i);
  CHECK_EQ(var_of_curve(ss, c), 5.0);

  // alternating x, y with 2K jumps
  int K = 4;
  StepCurve alt;
  for (int k = 0; k < K; ++k) {
    alt.points.push_back(0);
    alt.points.push_back(1);
  }
  alt.points.push_back(0);
  CHECK_EQ(var_of_curve(s, alt), 2.0 * K * s.dist(0, 1));

  CHECK_THROWS_AS(var_of_curve(s, StepCurve{}), ValidationError);
}

TEST_CASE("pair_variation") {
  FiniteMetricSpace s = four_point_space();
  PairMeasure single{{{0, 3, 1.0}}};
  CHECK_EQ(pair_variation(s, single), s.dist(0, 3));

  // sphere antipodal pairs with uniform weights integrate the distance to 2
  auto pairs = sphere_antipodal_sample(4, 10, 5);
  std::vector<std::vector<double>> pts;
  for (const auto& p : pairs) {
    pts.push_back(p[0]);
    pts.push_back(p[1]);
  }
  FiniteMetricSpace sphere = from_euclidean(pts);
  PairMeasure mu;
  for (std::size_t i = 0; i < 10; ++i) mu.atoms.push_back({2 * i, 2 * i + 1, 0.1});
  CHECK(std::abs(pair_variation(sphere, mu) - 2.0) < 1e-12);

  CHECK_THROWS_AS(pair_variation(s, PairMeasure{}), ValidationError);
  CHECK_THROWS_AS(pair_variation(s, PairMeasure{{{1, 1, 1.0}}}), ValidationError);
  CHECK_THROWS_AS(pair_variation(s, PairMeasure{{{0, 1, -1.0}}}), ValidationError);
}

TEST_CASE("pairs_from_curve") {
  FiniteMetricSpace s = four_point_space();
  PairMeasure two = pairs_from_curve(s, StepCurve{{1, 3}});
  REQUIRE_EQ(two.atoms.size(), 1);
  CHECK_EQ(two.atoms[0].x, 1);
  CHECK_EQ(two.atoms[0].y, 3);

  StaircasePoints stair = staircase_curve(6);
  FiniteMetricSpace ss = from_euclidean(stair.points);
  StepCurve c;
  for (std::size_t i = 0; i <= 6; ++i) c.points.push_back(i);
  PairMeasure mu = pairs_from_curve(ss, c);
  CHECK_EQ(mu.atoms.size(), 6);
  for (const auto& a : mu.atoms) CHECK_EQ(a.weight, 1.0);

  // the identity pair_variation(pairs_from_curve(c)) = var_of_curve(c)
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    StepCurve rc = random_curve(4, 2 + rng.next_index(0, 10), rng);
    bool constant = true;
    for (std::size_t p : rc.points) constant &= (p == rc.points[0]);
    if (constant) continue;
    CHECK(std::abs(pair_variation(s, pairs_from_curve(s, rc)) - var_of_curve(s, rc)) < 1e-12);
  }

  CHECK_THROWS_AS(pairs_from_curve(s, StepCurve{{2, 2, 2}}), ValidationError);
}

TEST_CASE("curve_from_pairs oscillation pattern") {
  FiniteMetricSpace s = four_point_space();
  SUBCASE("single pair, K=1: exactly two jumps across") {
    StepCurve c = curve_from_pairs(s, PairMeasure{{{0, 1, 1.0}}}, 1);
    CHECK_EQ(c.points, std::vector<std::size_t>{0, 1, 0});
    CHECK_EQ(var_of_curve(s, c), 2.0 * s.dist(0, 1));
  }
  SUBCASE("two pairs, K=2: oscillations plus one transfer leg") {
    PairMeasure mu{{{0, 1, 1.0}, {2, 3, 1.0}}};
    StepCurve c = curve_from_pairs(s, mu, 2);
    double expect = 4.0 * (s.dist(0, 1) + s.dist(2, 3)) + s.dist(0, 2);
    CHECK(std::abs(var_of_curve(s, c) - expect) < 1e-12);
    CHECK(var_of_curve(s, c) >= 4.0 * pair_variation(s, mu));
  }
  SUBCASE("K < 1 and non-unit weights rejected") {
    CHECK_THROWS_AS(curve_from_pairs(s, PairMeasure{{{0, 1, 1.0}}}, 0), ValidationError);
    CHECK_THROWS_AS(curve_from_pairs(s, PairMeasure{{{0, 1, 0.5}}}, 1), ValidationError);
  }
}

TEST_CASE("curve_from_pairs: the paper inequality Var >= 2K Var(x,y)") {
  FiniteMetricSpace s = four_point_space();
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    PairMeasure mu;
    std::size_t atoms = 1 + rng.next_index(0, 3);
    for (std::size_t a = 0; a < atoms; ++a) {
      std::size_t x = rng.next_index(0, 3), y = rng.next_index(0, 3);
      if (x == y) y = (y + 1) % 4;
      mu.atoms.push_back({x, y, 1.0});
    }
    for (int K : {1, 2, 5}) {
      StepCurve c = curve_from_pairs(s, mu, K);
      CHECK(var_of_curve(s, c) >= 2.0 * K * pair_variation(s, mu) - 1e-12);
    }
  }
}

namespace {

// merging repeated unordered pairs preserves sum w |f(x) - f(y)| for every f,
// hence the LVar; keeps the oscillating curves inside the exact cap
PairMeasure merge_unordered(const PairMeasure& mu) {
  PairMeasure out;
  for (const auto& a : mu.atoms) {
    bool merged = false;
    for (auto& b : out.atoms)
      if ((a.x == b.x && a.y == b.y) || (a.x == b.y && a.y == b.x)) {
        b.weight += a.weight;
        merged = true;
        break;
      }
    if (!merged) out.atoms.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("curve_from_pairs ratio converges to the pair-measure ratio") {
  FiniteMetricSpace s = four_point_space();
  PairMeasure mu{{{0, 2, 1.0}, {1, 3, 1.0}}};
  double target = lvar_exact(s, mu).value / pair_variation(s, mu);
  double previous_gap = -1.0;
  for (int K : {1, 2, 4, 8}) {
    StepCurve c = curve_from_pairs(s, mu, K);
    PairMeasure steps = merge_unordered(pairs_from_curve(s, c));
    double ratio = lvar_exact(s, steps).value / var_of_curve(s, c);
    double gap = std::abs(ratio - target);
    if (previous_gap >= 0.0) CHECK(gap <= previous_gap + 1e-12);
    previous_gap = gap;
  }
  CHECK(previous_gap < 0.05);
}

TEST_CASE("scale_space interacts with variation and LVar") {
  FiniteMetricSpace s = four_point_space();
  PairMeasure mu{{{0, 1, 1.0}, {2, 3, 0.5}}};
  double base_var = pair_variation(s, mu);
  double base_lvar = lvar_exact(s, mu).value;

  FiniteMetricSpace doubled = scale_space(s, 2.0);
  CHECK(std::abs(pair_variation(doubled, mu) - 2.0 * base_var) < 1e-12);
  CHECK(std::abs(lvar_exact(doubled, mu).value - 2.0 * base_lvar) < 1e-9);

  // the LCJ ratio is scale invariant
  double r1 = base_lvar / base_var;
  double r2 = lvar_exact(doubled, mu).value / pair_variation(doubled, mu);
  CHECK(std::abs(r1 - r2) < 1e-12);
}

TEST_CASE("concatenate_curves") {
  FiniteMetricSpace s = four_point_space();
  StepCurve a{{0, 1, 2}};
  CHECK_EQ(concatenate_curves({a}).points, a.points);

  StepCurve b{{2, 3}};
  StepCurve joined = concatenate_curves({a, b});
  CHECK(std::abs(var_of_curve(s, joined) - (var_of_curve(s, a) + var_of_curve(s, b))) < 1e-12);

  Rng rng(9);
  std::vector<StepCurve> three;
  for (int i = 0; i < 3; ++i) three.push_back(random_curve(4, 3 + rng.next_index(0, 4), rng));
  StepCurve all = concatenate_curves(three);
  double direct = var_of_curve(s, all);
  double parts = 0.0;
  for (const auto& c : three) parts += var_of_curve(s, c);
  parts += s.dist(three[0].points.back(), three[1].points.front());
  parts += s.dist(three[1].points.back(), three[2].points.front());
  CHECK(std::abs(direct - parts) < 1e-12);

  CHECK_THROWS_AS(concatenate_curves({}), ValidationError);
}
