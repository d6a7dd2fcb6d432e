#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>

#include "lcjlab/generators.hpp"
#include "lcjlab/lipschitz.hpp"
#include "lcjlab/metric_space.hpp"
#include "lcjlab/rng.hpp"

using namespace lcj;

namespace {

// independent BFS oracle over an adjacency list with unit edges
std::vector<double> bfs_oracle(std::size_t src, const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<double> d(adj.size(), std::numeric_limits<double>::infinity());
  std::queue<std::size_t> q;
  d[src] = 0.0;
  q.push(src);
  while (!q.empty()) {
    std::size_t u = q.front();
    q.pop();
    for (std::size_t v : adj[u])
      if (!std::isfinite(d[v])) {
        d[v] = d[u] + 1.0;
        q.push(v);
      }
  }
  return d;
}

std::vector<std::vector<std::size_t>> tree_adjacency(int depth) {
  std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t id = 1; id < n; ++id) {
    adj[id].push_back(TreeSpec::parent(id));
    adj[TreeSpec::parent(id)].push_back(id);
  }
  return adj;
}

// exhaustive minimal (r/2)-cover of the ball around `center`, centers anywhere
std::size_t minimal_cover_oracle(const FiniteMetricSpace& s, std::size_t center, double r) {
  std::vector<std::size_t> ball;
  for (std::size_t y = 0; y < s.size(); ++y)
    if (s.dist(center, y) <= r) ball.push_back(y);
  std::size_t n = s.size();
  for (std::size_t size = 1; size <= ball.size(); ++size) {
    std::vector<std::size_t> idx(size);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t at, std::size_t lo) {
      if (at == size) {
        for (std::size_t b : ball) {
          bool covered = false;
          for (std::size_t c : idx)
            if (s.dist(c, b) <= r / 2.0) covered = true;
          if (!covered) return false;
        }
        return true;
      }
      for (std::size_t c = lo; c < n; ++c) {
        idx[at] = c;
        if (rec(at + 1, c + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) return size;
  }
  return ball.size();
}

}  // namespace

TEST_CASE("validate_metric basic examples") {
  CHECK(validate_metric({{0.0}}).valid);

  std::vector<std::vector<double>> bad = {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}};
  auto rep = validate_metric(bad);
  CHECK_FALSE(rep.valid);
  REQUIRE_FALSE(rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.i == 0 && v.k == 2 && v.j == 1 && std::abs(v.slack - 1.0) < 1e-12) found = true;
  CHECK(found);

  CHECK_THROWS_AS(validate_metric({{0, 1}, {1, 0}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(
      validate_metric({{0.0, std::numeric_limits<double>::quiet_NaN()}, {1.0, 0.0}}),
      ValidationError);
}

TEST_CASE("validate_metric reports symmetry and diagonal errors") {
  std::vector<std::vector<double>> m = {{0, 1, 2}, {1.5, 0, 1}, {2, 1, 0.25}};
  auto rep = validate_metric(m);
  CHECK_FALSE(rep.valid);
  REQUIRE_EQ(rep.symmetry_errors.size(), 1);
  CHECK_EQ(rep.symmetry_errors[0].i, 0);
  CHECK_EQ(rep.symmetry_errors[0].j, 1);
  REQUIRE_EQ(rep.diagonal_errors.size(), 1);
  CHECK_EQ(rep.diagonal_errors[0], 2);
}

TEST_CASE("depth-2 dyadic tree matrix is a valid metric (BFS oracle)") {
  TreeSpace t = dyadic_tree(2);
  CHECK(validate_metric(t.space).valid);
  auto adj = tree_adjacency(2);
  for (std::size_t u = 0; u < t.space.size(); ++u) {
    auto d = bfs_oracle(u, adj);
    for (std::size_t v = 0; v < t.space.size(); ++v) CHECK_EQ(t.space.dist(u, v), d[v]);
  }
}

TEST_CASE("from_weighted_graph path and scaling") {
  FiniteMetricSpace path = from_weighted_graph({"0", "1", "2"}, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK_EQ(path.dist(0, 2), 2.0);

  LaaksoStage g1 = laakso_stage(1);
  CHECK_EQ(g1.space.dist(g1.graph.left, g1.graph.right), 1.0);

  int N = 4;
  TreeSpace t = dyadic_tree(N);
  std::size_t first_leaf = t.tree.leaves.front();  // under the root's left child
  std::size_t last_leaf = t.tree.leaves.back();    // under the root's right child
  CHECK_EQ(t.space.dist(first_leaf, last_leaf), 2.0 * N);
}

TEST_CASE("from_weighted_graph rejects disconnected graphs with a named pair") {
  CHECK_THROWS_WITH_AS(from_weighted_graph({"a", "b", "c"}, {{0, 1, 1.0}}),
                       doctest::Contains("disconnected"), ValidationError);
}

TEST_CASE("from_weighted_graph is invariant under vertex relabeling") {
  std::vector<WeightedEdge> edges = {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}, {0, 3, 5.0}};
  FiniteMetricSpace base = from_weighted_graph({"a", "b", "c", "d"}, edges);
  std::vector<std::size_t> perm = {2, 0, 3, 1};  // new index of old vertex i
  std::vector<WeightedEdge> permuted;
  for (const auto& e : edges) permuted.push_back({perm[e.u], perm[e.v], e.weight});
  std::vector<std::string> labels(4);
  for (std::size_t i = 0; i < 4; ++i) labels[perm[i]] = base.label(i);
  FiniteMetricSpace moved = from_weighted_graph(labels, permuted);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK_EQ(base.dist(i, j), moved.dist(perm[i], perm[j]));
}

TEST_CASE("from_euclidean distances") {
  FiniteMetricSpace two = from_euclidean({{0, 0, 0}, {1, 0, 0}});
  CHECK_EQ(two.dist(0, 1), 1.0);
  CHECK(two.coords.has_value());

  FiniteMetricSpace antipodal = from_euclidean({{0.6, 0.8}, {-0.6, -0.8}});
  CHECK(std::abs(antipodal.dist(0, 1) - 2.0) < 1e-15);

  Rng rng(7);
  std::vector<std::vector<double>> pts(3, std::vector<double>(4));
  for (auto& p : pts)
    for (auto& x : p) x = rng.next_uniform(-1, 1);
  FiniteMetricSpace s = from_euclidean(pts);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double acc = 0;
      for (std::size_t k = 0; k < 4; ++k) acc += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      CHECK(std::abs(s.dist(i, j) - std::sqrt(acc)) < 1e-15);
    }

  CHECK_THROWS_AS(from_euclidean({{1, 2}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(from_euclidean({{1, 2}, {1, 2, 3}}), ValidationError);
}

TEST_CASE("lipschitz_constant") {
  TreeSpace t = dyadic_tree(2);
  std::size_t n = t.space.size();

  std::vector<double> constant(n, 3.5);
  CHECK_EQ(lipschitz_constant(t.space, constant).L, 0.0);

  std::size_t p = t.tree.leaves[1];
  std::vector<double> distfun(n);
  for (std::size_t x = 0; x < n; ++x) distfun[x] = t.space.dist(x, p);
  auto lc = lipschitz_constant(t.space, distfun);
  CHECK(std::abs(lc.L - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(distfun[lc.witness_i] - distfun[lc.witness_j]) -
                 t.space.dist(lc.witness_i, lc.witness_j)) < 1e-12);

  // random values on a 5-point space against an independent exhaustive scan
  FiniteMetricSpace s = from_euclidean({{0., 0.}, {1., 0.}, {0., 2.}, {3., 1.}, {-1., -1.}});
  Rng rng(11);
  std::vector<double> f(5);
  for (auto& v : f) v = rng.next_uniform(-2, 2);
  double oracle = 0.0;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      if (i != j) oracle = std::max(oracle, std::abs(f[i] - f[j]) / s.dist(i, j));
  CHECK(std::abs(lipschitz_constant(s, f).L - oracle) < 1e-15);

  CHECK_THROWS_AS(lipschitz_constant(from_euclidean({{0.}, {1.}}), std::vector<double>{1.0}),
                  ValidationError);
}

TEST_CASE("mcshane_extend") {
  FiniteMetricSpace path =
      from_weighted_graph({"0", "1", "2", "3"}, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  SUBCASE("anchors everywhere reproduce g") {
    std::vector<double> g = {0.0, 0.5, 1.0, 0.25};
    auto f = mcshane_extend(path, {0, 1, 2, 3}, g, 1.0);
    for (std::size_t i = 0; i < 4; ++i) CHECK_EQ(f.values[i], g[i]);
  }
  SUBCASE("single anchor gives the distance function") {
    auto f = mcshane_extend(path, {1}, {0.0}, 1.0);
    for (std::size_t x = 0; x < 4; ++x) CHECK_EQ(f.values[x], path.dist(x, 1));
  }
  SUBCASE("two anchors match the min formula at every vertex") {
    auto f = mcshane_extend(path, {0, 3}, {1.0, 0.0}, 0.75);
    for (std::size_t x = 0; x < 4; ++x) {
      double expected = std::min(1.0 + 0.75 * path.dist(x, 0), 0.0 + 0.75 * path.dist(x, 3));
      CHECK_EQ(f.values[x], expected);
    }
    CHECK(lipschitz_constant(path, f.values).L <= 0.75 + 1e-12);
  }
  SUBCASE("violating anchors are rejected with the pair named") {
    CHECK_THROWS_WITH_AS(mcshane_extend(path, {0, 1}, {0.0, 5.0}, 1.0), doctest::Contains("'1'"),
                         ValidationError);
  }
}

TEST_CASE("restrict") {
  TreeSpace t = dyadic_tree(3);
  std::vector<std::size_t> all(t.space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  FiniteMetricSpace full = restrict(t.space, all);
  CHECK_EQ(full.flat(), t.space.flat());

  // leaf-to-leaf distances via a BFS oracle
  FiniteMetricSpace leaves = restrict(t.space, t.tree.leaves);
  auto adj = tree_adjacency(3);
  for (std::size_t a = 0; a < t.tree.leaves.size(); ++a) {
    auto d = bfs_oracle(t.tree.leaves[a], adj);
    for (std::size_t b = 0; b < t.tree.leaves.size(); ++b)
      CHECK_EQ(leaves.dist(a, b), d[t.tree.leaves[b]]);
  }

  FiniteMetricSpace single = restrict(t.space, {0});
  CHECK_EQ(single.size(), 1);
  CHECK_THROWS_AS(restrict(t.space, {}), ValidationError);
}

TEST_CASE("is_ultrametric") {
  CantorSpace cantor = cantor_space(2, 4, 0.2);
  CHECK(is_ultrametric(cantor.space, 0.0).is_ultrametric);

  FiniteMetricSpace line = from_euclidean({{0.0}, {1.0}, {2.0}});
  auto check = is_ultrametric(line, 0.0);
  CHECK_FALSE(check.is_ultrametric);
  REQUIRE(check.witness.has_value());
  auto [i, k, j] = *check.witness;
  CHECK(line.dist(i, k) > std::max(line.dist(i, j), line.dist(j, k)));

  // leaves of the dyadic tree with the LCA metric, exhaustive triples
  FiniteMetricSpace leaves = tree_leaves_ultrametric(4);
  CHECK(is_ultrametric(leaves, 0.0).is_ultrametric);
}

TEST_CASE("estimate_doubling") {
  FiniteMetricSpace one({"a"}, {0.0});
  CHECK_EQ(estimate_doubling(one), 1);

  FiniteMetricSpace two = from_euclidean({{0.0}, {1.0}});
  CHECK(estimate_doubling(two) <= 2);

  // 8 equally spaced points on a line: greedy agrees with the exhaustive
  // minimal cover on this instance
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < 8; ++i) pts.push_back({static_cast<double>(i)});
  FiniteMetricSpace lined = from_euclidean(pts);
  std::size_t greedy = estimate_doubling(lined);
  std::size_t oracle = 0;
  std::set<double> radii;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) radii.insert(lined.dist(i, j));
  for (std::size_t c = 0; c < 8; ++c)
    for (double r : radii) oracle = std::max(oracle, minimal_cover_oracle(lined, c, r));
  CHECK(greedy >= oracle);  // a greedy cover is never smaller than a minimal one
  CHECK(greedy <= 4);
  CHECK_EQ(greedy, oracle);
}

TEST_CASE("generated spaces validate at the stated tolerances") {
  CHECK(validate_metric(dyadic_tree(4).space, 1e-9).valid);
  CHECK(validate_metric(tree_leaves_ultrametric(5), 1e-9).valid);
  CHECK(validate_metric(laakso_stage(2).space, 1e-7).valid);
  CHECK(validate_metric(cantor_space(2, 5, 0.2).space, 1e-9).valid);
}

TEST_CASE("scale_space") {
  FiniteMetricSpace s = from_euclidean({{0.0}, {1.0}, {2.5}});
  FiniteMetricSpace same = scale_space(s, 1.0);
  CHECK_EQ(same.flat(), s.flat());
  FiniteMetricSpace twice = scale_space(s, 2.0);
  CHECK_EQ(twice.dist(0, 2), 5.0);
  CHECK_THROWS_AS(scale_space(s, 0.0), ValidationError);
}
