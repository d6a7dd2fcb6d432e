#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lcjlab/metric_space.hpp"
#include "lcjlab/rational.hpp"

namespace lcj {

inline constexpr int kMaxTreeDepth = 16;
inline constexpr int kMaxLaaksoStage = 5;
inline constexpr std::size_t kMaxGeneratedPoints = 20000;

// Complete binary tree of depth N with unit edges. Vertex ids are
// level-ordered: id(level, pos) = 2^level - 1 + pos.
struct TreeSpec {
  int depth = 0;
  std::size_t vertex_count = 0;
  std::vector<std::size_t> leaves;  // ids at the deepest level

  static std::size_t id(int level, std::size_t pos) { return ((std::size_t{1} << level) - 1) + pos; }
  static int level_of(std::size_t id);
  static std::size_t parent(std::size_t id) { return (id - 1) / 2; }
};

struct TreeSpace {
  FiniteMetricSpace space;
  TreeSpec tree;
};

TreeSpace dyadic_tree(int depth);

// Leaves of the depth-N tree with the ultrametric rho'(u,v) = N - depth(LCA).
// The graph metric induced from the tree equals 2 * rho'.
FiniteMetricSpace tree_leaves_ultrametric(int depth);

// One edge of G_k and its position in the refinement hierarchy.
struct LaaksoEdge {
  std::size_t u = 0, v = 0;   // oriented left-to-right
  std::size_t parent = 0;     // index into the previous level's edge list
  bool rhombus = false;       // one of the four middle edges of its parent's copy
};

// Refinement record of one edge [A, D]: quarter points B, C and the two
// midpoints P (upper) and Q (lower) created in the next graph.
struct LaaksoSplit {
  std::size_t b = 0, p = 0, q = 0, c = 0;
};

struct LaaksoGraph {
  int depth = 0;                                   // N
  std::size_t vertex_count = 0;                    // |X_N|
  std::vector<std::size_t> stage_vertex_count;     // |X_k| for k = 0..N
  std::vector<std::vector<LaaksoEdge>> levels;     // levels[k] = edges of G_k
  std::vector<std::vector<LaaksoSplit>> splits;    // splits[k][e] refines levels[k][e], k < N
  std::size_t left = 0, right = 1;                 // the endpoints "0" and "1"
  std::vector<std::string> labels;

  // Probability that a uniform random left-right path of G_N traverses the
  // given edge of G_k. Outer edges inherit their parent's probability; the
  // four rhombus edges halve it. Exact dyadic rationals.
  Rational traverse_probability(int level, std::size_t edge_index) const;
};

struct LaaksoStage {
  FiniteMetricSpace space;  // X_N with 4^{-N} times the graph metric of G_N
  LaaksoGraph graph;
};

// Builds only the graphs (no distance matrix); cheap at every stage.
LaaksoGraph laakso_graph(int depth);
LaaksoStage laakso_stage(int depth);

struct CantorSpec {
  int branching = 2;
  int depth = 1;
  double q = 0.2;
  std::vector<std::string> words;  // length-D words over {0..b-1}, lexicographic
};

struct CantorSpace {
  FiniteMetricSpace space;  // rho(x, y) = q^{LCP(x, y)}
  CantorSpec spec;
};

CantorSpace cantor_space(int branching, int depth, double q);

// n independent antipodal pairs (x, -x), x uniform on the unit sphere of R^d
// via normalized Gaussian vectors. Deterministic for a fixed seed.
std::vector<std::array<std::vector<double>, 2>> sphere_antipodal_sample(int dim, std::size_t n,
                                                                        std::uint64_t seed);

struct StaircasePoints {
  std::vector<std::vector<double>> points;  // 0, e1, e1+e2, ..., e1+...+ed
};

// Jump points of the coordinate staircase in R^d; total variation d, every
// coordinate projection has variation 1.
StaircasePoints staircase_curve(int dim);

}  // namespace lcj
