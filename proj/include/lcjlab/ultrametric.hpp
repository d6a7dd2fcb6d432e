#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lcjlab/lipschitz.hpp"
#include "lcjlab/metric_space.hpp"

namespace lcj {

inline constexpr double kDefaultPhiQ = 0.2;  // 1/2 - q/(1-q) = 1/4 exactly at q = 1/5
inline constexpr int kPhiEnumerationCap = 24;

// Nested scale-q^n ball partitions of an exact ultrametric space with
// diameter at most 1. Blocks at scale n are the equivalence classes of
// dist <= q^n; distinct blocks are separated by more than q^n and blocks
// refine as n grows (both verified on construction).
struct BallHierarchy {
  double q = kDefaultPhiQ;
  int depth = 0;                                    // scales n = 1..depth
  std::size_t points = 0;
  std::vector<std::vector<std::size_t>> block_of;   // [n-1][point] -> block id at scale n
  std::vector<std::vector<std::size_t>> centers;    // [n-1][block] -> lexicographically least member
  std::vector<std::size_t> block_base;              // global coefficient index base per scale
  std::size_t total_blocks = 0;

  // First scale at which x and y fall in different blocks, or 0 if they are
  // never separated up to `depth`.
  int separation_scale(std::size_t x, std::size_t y) const;
};

BallHierarchy ball_hierarchy(const FiniteMetricSpace& space, double q, int depth);

// One realization of the random function Phi(x) = sum_n q^n eps_{n, block(x,n)}
// with independent fair bits per block. Lipschitz constant at most 1/(1-q).
struct PhiSample {
  std::vector<double> values;
  std::uint64_t seed = 0;
  double q = kDefaultPhiQ;
  std::vector<std::uint8_t> eps;  // indexed by block_base[n-1] + block id
};

PhiSample sample_phi(const BallHierarchy& hierarchy, std::uint64_t seed);

// Exact E|Phi(x) - Phi(y)| by enumerating the joint distribution of the
// 2(depth - n0 + 1) relevant independent bits (meet-in-the-middle, so the
// cost is ~3^{m/2}). Levels run n0..depth.
double phi_pair_expectation(double q, int n0, int depth);
double phi_expectation_exact(const BallHierarchy& hierarchy, std::size_t x, std::size_t y);

struct LcjCertificate {
  double c_star = 0.0;                    // min over pairs of E|Phi(x)-Phi(y)| / (C(q) rho(x,y))
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  double C_q = 0.0;                       // 1/(1-q), the certified Lipschitz constant of Phi
  double C_loose = 0.0;                   // 2/(1-q), valid for spaces merely equivalent to ultrametrics
  int depth = 0;                          // hierarchy depth used
  double diameter = 0.0;                  // normalization applied before building the hierarchy
};

// Positive lower bound on LCJ(space) for an exact ultrametric space: for any
// pair measure, E_Phi of the normalized oscillation dominates c_star times
// the distance, so some realization of Phi/C achieves ratio >= c_star.
// The space is rescaled to diameter 1 internally; LCJ is scale invariant.
// depth <= 0 selects the smallest depth at which all blocks are singletons.
LcjCertificate lcj_lower_certificate(const FiniteMetricSpace& space, double q = kDefaultPhiQ,
                                     int depth = 0);

}  // namespace lcj
