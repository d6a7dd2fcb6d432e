#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcjlab/filtration.hpp"
#include "lcjlab/generators.hpp"
#include "lcjlab/lipschitz.hpp"
#include "lcjlab/variation.hpp"

namespace lcj {

inline constexpr int kMaxTreeInstanceExponent = 3;   // depth 2^3 = 8, 256 leaves
inline constexpr int kMaxLaaksoInstanceDepth = 4;

// Paired atoms through one mid-vertex U at one level, in aggregated form:
// the product-uniform average over all admissible left/right matchings.
// Left and right hold the candidate far endpoints v'; every (left, right)
// combination carries the same weight.
struct TreeGroup {
  int level = 0;                          // k; the bound uses dM_{k+1}
  std::size_t mid = 0;                    // U
  std::size_t anchor = 0;                 // v, the segment start shared by all atoms through U
  std::vector<std::size_t> left, right;   // v' below U's left/right child
  Rational atoms_per_vertex;              // leaves below each v'
  Rational combo_weight;                  // measure weight per (left, right) pair
  Rational rho;                           // distance between any left and right v'
};

// The depth-2^N dyadic tree with the product filtration on leaf columns x
// dyadic height, the per-path martingales, and the aggregated adversarial
// pair measure. All probabilities and weights are exact dyadic rationals.
struct TreeInstance {
  int exponent = 0;                       // N; filtration levels 0..N
  int depth = 0;                          // 2^N
  TreeSpace host;
  Filtration filtration;
  struct AtomVertices {
    std::size_t v = 0, vprime = 0, mid = 0;  // mid == kNoParent at the finest level
  };
  std::vector<std::vector<AtomVertices>> atom_vertices;  // aligned with filtration levels
  std::vector<TreeGroup> groups;
  PairMeasure measure;
  Rational mass;              // integral of rho d mu = (L-1)/2
  int proposition_levels = 0; // L = N + 1
  Rational pairing_constant;  // c = 2^{-2^N - N}, same at every level
};

TreeInstance tree_instance(int exponent);

// Martingale adapted to the tree filtration built from f on the vertices:
// M_k = 2^{k-N} (f(v) - f(v')) on each atom. max |M| <= certified_L.
MartingaleSeq tree_martingale(const TreeInstance& instance, const LipschitzFunction& f);

// One refined edge [A, D] of G_k with quarter points B, C and midpoint pair
// (P, Q); weight = probability that a uniform left-right path traverses the
// edge. The number of paths is never materialized.
struct LaaksoGroup {
  int level = 0;  // k
  std::size_t a = 0, b = 0, c = 0, d = 0, p = 0, q = 0;
  Rational traverse;  // dyadic
  Rational rho;       // 2 * 4^{-k-1}
};

struct LaaksoInstance {
  int depth = 0;  // N
  LaaksoStage host;
  std::vector<LaaksoGroup> groups;  // levels k = 0..N-1, every edge of G_k
  PairMeasure measure;
  Rational mass;              // N/2 = (L-1)/2
  int proposition_levels = 0; // L = N + 1
};

LaaksoInstance laakso_instance(int depth);

struct Condition42Report {
  double min_constant = 0.0;      // min over groups of E|dM_{n+1}|chi / (sum of c |f(x1)-f(x2)|)
  std::size_t groups_checked = 0; // groups with a nonzero denominator
  bool vacuous = false;           // every denominator vanished
};

// Realized constant of the martingale-difference lower bound, per paired
// group; f must be certified 1-Lipschitz.
Condition42Report condition42_check(const TreeInstance& instance, const LipschitzFunction& f);
Condition42Report condition42_check(const LaaksoInstance& instance, const LipschitzFunction& f);

struct ChainCertificate {
  double lvar_f = 0.0;    // sum w |f(x) - f(y)| over the adversarial measure
  double sum_edm = 0.0;   // sum_n E|dM_{n+1}|
  double max_abs_m = 0.0; // ||M||_inf
  double kappa = 1.0;     // 1 for the tree, 4 for Laakso
  int levels = 0;         // L
  bool pass = false;
};

// The full upper-bound chain for one function:
//   sum w |f(x)-f(y)|  <=  kappa * sum_n E|dM_{n+1}|  <=  kappa * sqrt(L) ||M||.
ChainCertificate chain_certificate(const TreeInstance& instance, const LipschitzFunction& f,
                                   double tol = 1e-9);
ChainCertificate chain_certificate(const LaaksoInstance& instance, const LipschitzFunction& f,
                                   double tol = 1e-9);

// lhs of the six-point inequality; >= |p - q| for all reals.
double sixpoint_lhs(double a, double b, double c, double d, double p, double q);

struct SixPointReport {
  double min_ratio = 0.0;
  std::size_t evaluated = 0;  // samples with |f(P) - f(Q)| above the skip threshold
  bool pass = false;
};

// Randomized falsification attempt on uniform tuples in [-1, 1]^6.
SixPointReport sixpoint_inequality_check(std::size_t samples, std::uint64_t seed, int threads = 1);

}  // namespace lcj
