#include "lcjlab/generators.hpp"

#include <algorithm>
#include <cmath>

#include "lcjlab/rng.hpp"

namespace lcj {

int TreeSpec::level_of(std::size_t id) {
  int level = 0;
  while (((std::size_t{1} << (level + 1)) - 1) <= id) ++level;
  return level;
}

TreeSpace dyadic_tree(int depth) {
  if (depth < 1 || depth > kMaxTreeDepth)
    throw CapExceeded("dyadic_tree: depth must lie in [1, " + std::to_string(kMaxTreeDepth) + "]");
  std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  if (n > kMaxGeneratedPoints)
    throw CapExceeded("dyadic_tree: " + std::to_string(n) + " vertices exceed the point cap");
  std::vector<std::string> labels(n);
  std::vector<WeightedEdge> edges;
  edges.reserve(n - 1);
  for (int level = 0; level <= depth; ++level) {
    std::size_t width = std::size_t{1} << level;
    for (std::size_t pos = 0; pos < width; ++pos) {
      std::size_t id = TreeSpec::id(level, pos);
      labels[id] = "v" + std::to_string(level) + "_" + std::to_string(pos);
      if (id > 0) edges.push_back({TreeSpec::parent(id), id, 1.0});
    }
  }
  TreeSpace out{from_weighted_graph(labels, edges, 1.0), {}};
  out.tree.depth = depth;
  out.tree.vertex_count = n;
  std::size_t leaf_count = std::size_t{1} << depth;
  out.tree.leaves.reserve(leaf_count);
  for (std::size_t pos = 0; pos < leaf_count; ++pos) out.tree.leaves.push_back(TreeSpec::id(depth, pos));
  return out;
}

FiniteMetricSpace tree_leaves_ultrametric(int depth) {
  if (depth < 1 || depth > kMaxTreeDepth)
    throw CapExceeded("tree_leaves_ultrametric: depth must lie in [1, " +
                      std::to_string(kMaxTreeDepth) + "]");
  std::size_t n = std::size_t{1} << depth;
  if (n > kMaxGeneratedPoints)
    throw CapExceeded("tree_leaves_ultrametric: " + std::to_string(n) + " leaves exceed the point cap");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "leaf" + std::to_string(i);
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // depth of the latest common ancestor = common prefix length of the
      // leaf positions read as depth-bit words
      std::size_t x = i ^ j;
      int lca_depth = depth;
      while (x != 0) {
        x >>= 1;
        --lca_depth;
      }
      double d = static_cast<double>(depth - lca_depth);
      flat[i * n + j] = flat[j * n + i] = d;
    }
  return FiniteMetricSpace(std::move(labels), std::move(flat));
}

Rational LaaksoGraph::traverse_probability(int level, std::size_t edge_index) const {
  int halvings = 0;
  for (int k = level; k >= 0; --k) {
    const LaaksoEdge& e = levels[k][edge_index];
    if (e.rhombus) ++halvings;
    edge_index = e.parent;
  }
  return Rational(1) / Rational::pow2(halvings);
}

LaaksoGraph laakso_graph(int depth) {
  if (depth < 1 || depth > kMaxLaaksoStage)
    throw CapExceeded("laakso: stage must lie in [1, " + std::to_string(kMaxLaaksoStage) + "]");
  LaaksoGraph g;
  g.depth = depth;
  g.labels = {"0", "1"};
  g.left = 0;
  g.right = 1;
  g.stage_vertex_count = {2};
  g.levels.resize(depth + 1);
  g.levels[0].push_back({0, 1, 0, false});
  auto new_vertex = [&g]() {
    std::size_t id = g.labels.size();
    g.labels.push_back("w" + std::to_string(id));
    return id;
  };
  for (int k = 0; k < depth; ++k) {
    g.splits.emplace_back();
    for (std::size_t e = 0; e < g.levels[k].size(); ++e) {
      const auto parent = g.levels[k][e];
      std::size_t b = new_vertex();
      std::size_t p = new_vertex();
      std::size_t q = new_vertex();
      std::size_t c = new_vertex();
      g.splits[k].push_back({b, p, q, c});
      g.levels[k + 1].push_back({parent.u, b, e, false});
      g.levels[k + 1].push_back({b, p, e, true});
      g.levels[k + 1].push_back({b, q, e, true});
      g.levels[k + 1].push_back({p, c, e, true});
      g.levels[k + 1].push_back({q, c, e, true});
      g.levels[k + 1].push_back({c, parent.v, e, false});
    }
    g.stage_vertex_count.push_back(g.labels.size());
  }
  g.vertex_count = g.labels.size();
  return g;
}

LaaksoStage laakso_stage(int depth) {
  LaaksoGraph g = laakso_graph(depth);
  if (g.vertex_count > kMaxGeneratedPoints)
    throw CapExceeded("laakso_stage: vertex count exceeds the point cap");
  std::vector<WeightedEdge> edges;
  edges.reserve(g.levels[depth].size());
  for (const auto& e : g.levels[depth]) edges.push_back({e.u, e.v, 1.0});
  double scale = std::ldexp(1.0, -2 * depth);  // 4^{-N}, exact
  FiniteMetricSpace space = from_weighted_graph(g.labels, edges, scale);
  return {std::move(space), std::move(g)};
}

CantorSpace cantor_space(int branching, int depth, double q) {
  if (branching < 2) throw ValidationError("cantor_space: branching must be at least 2");
  if (depth < 1) throw ValidationError("cantor_space: depth must be at least 1");
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("cantor_space: q must lie in (0, 1)");
  double count = std::pow(static_cast<double>(branching), depth);
  if (count > static_cast<double>(kMaxGeneratedPoints))
    throw CapExceeded("cantor_space: b^D exceeds the point cap of " +
                      std::to_string(kMaxGeneratedPoints));
  std::size_t n = static_cast<std::size_t>(count + 0.5);
  CantorSpec spec{branching, depth, q, {}};
  spec.words.reserve(n);
  std::string word(depth, '0');
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t x = i;
    for (int pos = depth - 1; pos >= 0; --pos) {
      word[pos] = static_cast<char>('0' + static_cast<int>(x % branching));
      x /= branching;
    }
    spec.words.push_back(word);
  }
  std::vector<double> qpow(depth);
  qpow[0] = 1.0;
  for (int k = 1; k < depth; ++k) qpow[k] = qpow[k - 1] * q;
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int lcp = 0;
      while (spec.words[i][lcp] == spec.words[j][lcp]) ++lcp;  // words differ, so lcp < depth
      flat[i * n + j] = flat[j * n + i] = qpow[lcp];
    }
  FiniteMetricSpace space(spec.words, std::move(flat));
  return {std::move(space), std::move(spec)};
}

std::vector<std::array<std::vector<double>, 2>> sphere_antipodal_sample(int dim, std::size_t n,
                                                                        std::uint64_t seed) {
  if (dim < 2) throw ValidationError("sphere_antipodal_sample: dimension must be at least 2");
  if (n < 1) throw ValidationError("sphere_antipodal_sample: need at least one pair");
  Rng rng(seed);
  std::vector<std::array<std::vector<double>, 2>> pairs(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> x(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        x[k] = rng.next_gaussian();
        norm2 += x[k] * x[k];
      }
    } while (norm2 == 0.0);
    double inv = 1.0 / std::sqrt(norm2);
    std::vector<double> neg(dim);
    for (int k = 0; k < dim; ++k) {
      x[k] *= inv;
      neg[k] = -x[k];
    }
    pairs[i] = {std::move(x), std::move(neg)};
  }
  return pairs;
}

StaircasePoints staircase_curve(int dim) {
  if (dim < 1) throw ValidationError("staircase_curve: dimension must be at least 1");
  StaircasePoints out;
  out.points.assign(dim + 1, std::vector<double>(dim, 0.0));
  for (int i = 1; i <= dim; ++i) {
    out.points[i] = out.points[i - 1];
    out.points[i][i - 1] = 1.0;
  }
  return out;
}

}  // namespace lcj
