#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "lcjlab/filtration.hpp"
#include "lcjlab/instances.hpp"
#include "lcjlab/lvar.hpp"
#include "lcjlab/rng.hpp"

using namespace lcj;

namespace {

// random L-Lipschitz function on the dyadic grid with 2^N + 1 points
std::vector<double> random_grid_lipschitz(int levels, double L, Rng& rng) {
  std::size_t grid = (std::size_t{1} << levels) + 1;
  double step = 1.0 / static_cast<double>(grid - 1);
  std::vector<double> f(grid);
  f[0] = rng.next_uniform(-1.0, 1.0);
  for (std::size_t i = 1; i < grid; ++i)
    f[i] = f[i - 1] + rng.next_uniform(-L, L) * step;
  return f;
}

LipschitzFunction certified_random_lipschitz(const FiniteMetricSpace& space, Rng& rng) {
  LipschitzFunction f = random_lipschitz(space, rng);
  REQUIRE(f.certified_L <= 1.0);
  return f;
}

}  // namespace

TEST_CASE("dyadic_martingale closed forms") {
  SUBCASE("f(t) = t gives M == 1") {
    int N = 4;
    std::size_t grid = (std::size_t{1} << N) + 1;
    std::vector<double> f(grid);
    for (std::size_t i = 0; i < grid; ++i) f[i] = static_cast<double>(i) / (grid - 1);
    MartingaleSeq m = dyadic_martingale(f, N);
    for (const auto& level : m.values)
      for (double v : level) CHECK(std::abs(v - 1.0) < 1e-12);
  }
  SUBCASE("f(t) = |t - 1/2| splits into -1 and +1 at level one") {
    int N = 3;
    std::size_t grid = (std::size_t{1} << N) + 1;
    std::vector<double> f(grid);
    for (std::size_t i = 0; i < grid; ++i)
      f[i] = std::abs(static_cast<double>(i) / (grid - 1) - 0.5);
    MartingaleSeq m = dyadic_martingale(f, N);
    CHECK_EQ(m.values[1][0], -1.0);
    CHECK_EQ(m.values[1][1], 1.0);
    CHECK_EQ(m.values[0][0], 0.0);
  }
  SUBCASE("grid size mismatch is rejected") {
    CHECK_THROWS_AS(dyadic_martingale(std::vector<double>(7, 0.0), 3), ValidationError);
  }
}

TEST_CASE("dyadic martingale identity, bound, and midpoint formula") {
  Rng rng(100);
  for (int trial = 0; trial < 50; ++trial) {
    int N = 1 + static_cast<int>(rng.next_index(0, 5));
    std::vector<double> f = random_grid_lipschitz(N, 1.0, rng);
    Filtration filt = dyadic_filtration(N);
    MartingaleSeq m = dyadic_martingale(f, N);
    auto mc = check_martingale(filt, m, 1e-10);
    CHECK(mc.ok);
    double max_abs = 0.0;
    for (const auto& level : m.values)
      for (double v : level) max_abs = std::max(max_abs, std::abs(v));
    CHECK(max_abs <= 1.0 + 1e-12);

    // E|dM_{n+1}| chi_{[A,C)} = |f(C) + f(A) - 2 f(B)| with B the midpoint
    for (int n = 0; n + 1 <= N; ++n) {
      std::size_t stride = (std::size_t{1} << (N - n));
      for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        double lhs = expected_abs_increment(filt, m, n, k);
        double A = f[k * stride], C = f[(k + 1) * stride], B = f[k * stride + stride / 2];
        CHECK(std::abs(lhs - std::abs(C + A - 2.0 * B)) < 1e-12);
      }
    }
  }
}

TEST_CASE("check_orthogonality") {
  SUBCASE("linear f has vanishing differences") {
    int N = 4;
    std::size_t grid = (std::size_t{1} << N) + 1;
    std::vector<double> f(grid);
    for (std::size_t i = 0; i < grid; ++i) f[i] = static_cast<double>(i) / (grid - 1);
    auto rep = check_orthogonality(dyadic_filtration(N), dyadic_martingale(f, N));
    CHECK(rep.ok);
    CHECK_EQ(rep.max_correlation, 0.0);
  }
  SUBCASE("random Lipschitz f at N = 6") {
    Rng rng(200);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> f = random_grid_lipschitz(6, 1.0, rng);
      auto rep = check_orthogonality(dyadic_filtration(6), dyadic_martingale(f, 6));
      CHECK(rep.ok);
      CHECK(rep.max_correlation <= 1e-10);
    }
  }
  SUBCASE("a corrupted martingale is refused with the atom named") {
    Rng rng(201);
    std::vector<double> f = random_grid_lipschitz(3, 1.0, rng);
    MartingaleSeq m = dyadic_martingale(f, 3);
    m.values[2][1] += 0.5;
    CHECK_THROWS_WITH_AS(check_orthogonality(dyadic_filtration(3), m),
                         doctest::Contains("worst atom"), ValidationError);
  }
}

TEST_CASE("sqrtN inequality") {
  Rng rng(300);
  SUBCASE("N = 1 reduces to L1 <= Linf") {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> f = random_grid_lipschitz(1, 1.0, rng);
      auto rep = sqrtN_inequality_check(dyadic_filtration(1), dyadic_martingale(f, 1));
      CHECK(rep.pass);
    }
  }
  SUBCASE("linear f has zero left side") {
    std::size_t grid = 9;
    std::vector<double> f(grid);
    for (std::size_t i = 0; i < grid; ++i) f[i] = static_cast<double>(i) / (grid - 1);
    auto rep = sqrtN_inequality_check(dyadic_filtration(3), dyadic_martingale(f, 3));
    CHECK_EQ(rep.lhs, 0.0);
    CHECK(rep.pass);
  }
  SUBCASE("holds over random Lipschitz functions at N = 8") {
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<double> f = random_grid_lipschitz(8, 1.0, rng);
      auto rep = sqrtN_inequality_check(dyadic_filtration(8), dyadic_martingale(f, 8));
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("tree_instance structure and exact arithmetic") {
  for (int N = 1; N <= 3; ++N) {
    TreeInstance inst = tree_instance(N);
    CHECK_EQ(inst.depth, 1 << N);
    CHECK_EQ(inst.proposition_levels, N + 1);
    inst.filtration.validate();

    // mass identity (L - 1) / 2 in exact rational arithmetic
    CHECK_EQ(inst.mass, Rational(N, 2));
    CHECK(std::abs(pair_variation(inst.host.space, inst.measure) - inst.mass.to_double()) < 1e-12);

    // atom probabilities are 2^{-2^N - k}
    for (int k = 0; k <= N; ++k) {
      Rational expect = Rational(1) / (Rational::pow2(inst.depth) * Rational::pow2(k));
      for (const auto& atom : inst.filtration.levels[k]) CHECK_EQ(atom.prob, expect);
    }

    // every group: distance between left and right endpoints is 2^{N-k},
    // and the pairing constant times rho recovers the atom probability
    for (const auto& g : inst.groups) {
      double rho = std::ldexp(1.0, N - g.level);
      for (std::size_t a : g.left)
        for (std::size_t b : g.right) CHECK_EQ(inst.host.space.dist(a, b), rho);
      CHECK_EQ(g.rho, Rational::pow2(N - g.level));
      Rational atom_prob = inst.filtration.levels[g.level][0].prob;
      CHECK_EQ(inst.pairing_constant * g.rho, atom_prob);
    }
  }
  CHECK_THROWS_AS(tree_instance(4), CapExceeded);
}

TEST_CASE("tree_martingale") {
  TreeInstance inst = tree_instance(2);
  std::size_t n = inst.host.space.size();

  SUBCASE("depth function gives M == -1") {
    LipschitzFunction depth{std::vector<double>(n), 1.0};
    for (std::size_t v = 0; v < n; ++v)
      depth.values[v] = static_cast<double>(TreeSpec::level_of(v));
    MartingaleSeq m = tree_martingale(inst, depth);
    for (const auto& level : m.values)
      for (double v : level) CHECK_EQ(v, -1.0);
    CHECK(check_martingale(inst.filtration, m).ok);
  }
  SUBCASE("constant function gives M == 0") {
    LipschitzFunction constant{std::vector<double>(n, 3.0), 0.0};
    MartingaleSeq m = tree_martingale(inst, constant);
    for (const auto& level : m.values)
      for (double v : level) CHECK_EQ(v, 0.0);
  }
  SUBCASE("random 1-Lipschitz functions: martingale property and the sup bound") {
    Rng rng(400);
    for (int trial = 0; trial < 100; ++trial) {
      LipschitzFunction f = certified_random_lipschitz(inst.host.space, rng);
      MartingaleSeq m = tree_martingale(inst, f);
      CHECK(check_martingale(inst.filtration, m, 1e-10).ok);
      double max_abs = 0.0;
      for (const auto& level : m.values)
        for (double v : level) max_abs = std::max(max_abs, std::abs(v));
      CHECK(max_abs <= 1.0 + 1e-12);
    }
  }
  SUBCASE("orthogonality holds on the tree filtration") {
    Rng rng(401);
    for (int trial = 0; trial < 10; ++trial) {
      LipschitzFunction f = certified_random_lipschitz(inst.host.space, rng);
      CHECK(check_orthogonality(inst.filtration, tree_martingale(inst, f), 1e-10).ok);
    }
  }
}

TEST_CASE("tree condition42 and the chain certificate") {
  Rng rng(500);
  for (int N = 1; N <= 2; ++N) {
    TreeInstance inst = tree_instance(N);
    double var = pair_variation(inst.host.space, inst.measure);
    double L = inst.proposition_levels;
    for (int trial = 0; trial < 300; ++trial) {
      LipschitzFunction f = certified_random_lipschitz(inst.host.space, rng);
      auto rep = condition42_check(inst, f);
      if (!rep.vacuous) CHECK(rep.min_constant >= 1.0 - 1e-10);
      auto chain = chain_certificate(inst, f);
      CHECK(chain.pass);
      // per-function decay bound from the acceptance formula
      CHECK(chain.lvar_f / var <= 2.0 * std::sqrt(L) / ((L - 1.0) / 2.0) * (1.0 + 1e-9));
    }
  }
  SUBCASE("constant f is vacuous") {
    TreeInstance inst = tree_instance(1);
    LipschitzFunction constant{std::vector<double>(inst.host.space.size(), 1.0), 0.0};
    auto rep = condition42_check(inst, constant);
    CHECK(rep.vacuous);
  }
  SUBCASE("the group-level E|dM| sums match the generic filtration computation") {
    TreeInstance inst = tree_instance(2);
    LipschitzFunction f = certified_random_lipschitz(inst.host.space, rng);
    MartingaleSeq m = tree_martingale(inst, f);
    // per level: sum over groups of the restricted increments = E|dM_{k+1}|
    for (int k = 0; k < inst.exponent; ++k) {
      double generic = 0.0;
      for (std::size_t a = 0; a < inst.filtration.levels[k].size(); ++a)
        generic += expected_abs_increment(inst.filtration, m, k, a);
      double grouped = 0.0;
      for (const auto& g : inst.groups) {
        if (g.level != k) continue;
        double s = 0.0;
        for (std::size_t v : g.left)
          s += std::abs(f.values[g.anchor] + f.values[v] - 2.0 * f.values[g.mid]);
        for (std::size_t v : g.right)
          s += std::abs(f.values[g.anchor] + f.values[v] - 2.0 * f.values[g.mid]);
        grouped += inst.pairing_constant.to_double() * g.atoms_per_vertex.to_double() * s;
      }
      CHECK(std::abs(generic - grouped) < 1e-12);
    }
  }
}

TEST_CASE("laakso_instance structure and exact arithmetic") {
  for (int N = 1; N <= 3; ++N) {
    LaaksoInstance inst = laakso_instance(N);
    CHECK_EQ(inst.proposition_levels, N + 1);
    CHECK_EQ(inst.mass, Rational(N, 2));
    CHECK(std::abs(pair_variation(inst.host.space, inst.measure) - inst.mass.to_double()) < 1e-12);

    // midpoint pair distances under the stage metric
    for (const auto& g : inst.groups) {
      double expect = 2.0 * std::pow(4.0, -(g.level + 1));
      CHECK_EQ(inst.host.space.dist(g.p, g.q), expect);
      CHECK(std::abs(g.rho.to_double() - expect) < 1e-15);
    }

    // per level, traversal probabilities sum to E[#edges of G_k on a path] = 4^k
    for (int k = 0; k < N; ++k) {
      Rational total(0);
      for (const auto& g : inst.groups)
        if (g.level == k) total += g.traverse;
      Rational expected(1);
      for (int i = 0; i < k; ++i) expected = expected * Rational(4);
      CHECK_EQ(total, expected);
    }
  }
  CHECK_THROWS_AS(laakso_instance(5), CapExceeded);
}

TEST_CASE("laakso condition42 and the chain certificate") {
  Rng rng(600);
  for (int N = 1; N <= 2; ++N) {
    LaaksoInstance inst = laakso_instance(N);
    double var = pair_variation(inst.host.space, inst.measure);
    double L = inst.proposition_levels;
    for (int trial = 0; trial < 300; ++trial) {
      LipschitzFunction f = certified_random_lipschitz(inst.host.space, rng);
      auto rep = condition42_check(inst, f);
      if (!rep.vacuous) CHECK(rep.min_constant >= 0.25 - 1e-10);
      auto chain = chain_certificate(inst, f);
      CHECK(chain.pass);
      CHECK(chain.lvar_f / var <= 2.0 * 4.0 * std::sqrt(L) / (L - 1.0) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("six-point inequality") {
  SUBCASE("zero denominator tuples are skipped") {
    // construct by hand: p == q
    CHECK_EQ(sixpoint_lhs(0.1, 0.2, 0.3, 0.4, 0.5, 0.5) >= 0.0, true);
  }
  SUBCASE("linear chain with a perturbed Q") {
    // f linear along A, B, P, C, D at unit steps; P = midpoint value
    double a = 0.0, b = 1.0, p = 2.0, c = 3.0, d = 4.0;
    double base = sixpoint_lhs(a, b, c, d, p, p);
    CHECK(base >= 0.0);
    for (double delta : {0.01, 0.1, 1.0}) {
      double q = p + delta;
      CHECK(sixpoint_lhs(a, b, c, d, p, q) >= delta - 1e-12);
    }
  }
  SUBCASE("randomized falsification finds no counterexample") {
    auto rep = sixpoint_inequality_check(100000, 9);
    CHECK(rep.pass);
    CHECK(rep.min_ratio >= 1.0 - 1e-12);
    CHECK(rep.evaluated > 99000);
  }
  SUBCASE("threaded run reproduces the serial result") {
    auto serial = sixpoint_inequality_check(50000, 9, 1);
    auto threaded = sixpoint_inequality_check(50000, 9, 4);
    CHECK_EQ(serial.min_ratio, threaded.min_ratio);
    CHECK_EQ(serial.evaluated, threaded.evaluated);
  }
}

TEST_CASE("filtration validation rejects structural defects") {
  Filtration f = dyadic_filtration(2);
  f.levels[1][0].prob = Rational(1, 3);
  CHECK_THROWS_AS(f.validate(), PropertyError);

  Filtration g = dyadic_filtration(2);
  g.levels[2][3].parent = 0;
  CHECK_THROWS_AS(g.validate(), PropertyError);
}
