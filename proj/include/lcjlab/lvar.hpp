#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "lcjlab/lipschitz.hpp"
#include "lcjlab/metric_space.hpp"
#include "lcjlab/transport.hpp"
#include "lcjlab/variation.hpp"

namespace lcj {

inline constexpr std::size_t kDefaultExactAtomCap = 20;

struct LVarResult {
  double value = 0.0;
  LipschitzFunction witness;   // certified_L <= 1
  std::vector<int> signs;      // +1/-1 per atom, signs[0] = +1
  bool exact = false;
};

// LVar(mu) = sup over 1-Lipschitz f of sum w |f(x) - f(y)|. For fixed f the
// optimal signs are sign(f(x) - f(y)), so maximizing the signed linear
// functional over all 2^{n-1} sign patterns (global flip fixed) and taking
// the Kantorovich dual of each is an exhaustive search.
LVarResult lvar_exact(const FiniteMetricSpace& space, const PairMeasure& mu,
                      std::size_t cap = kDefaultExactAtomCap);

// Single-sign-flip hill climbing from random restarts; a lower bound, and a
// running max over restarts for a fixed seed.
LVarResult lvar_localsearch(const FiniteMetricSpace& space, const PairMeasure& mu,
                            std::size_t restarts, std::uint64_t seed);

enum class CandidateFamily {
  distance_to_point,
  distance_to_set,
  random_projection,  // Euclidean hosts only
  mcshane_random,
  ultrametric_phi,    // exact-ultrametric hosts only
};

struct CandidateOptions {
  std::size_t samples_per_family = 64;
};

// Best score over sampled closed-form 1-Lipschitz candidates; every candidate
// is measured before scoring, so the result is a valid lower bound.
LVarResult lvar_candidates(const FiniteMetricSpace& space, const PairMeasure& mu,
                           const std::set<CandidateFamily>& families, std::uint64_t seed,
                           const CandidateOptions& options = {});

enum class LVarMethod { exact, localsearch, candidates };

struct LcjRatioOptions {
  std::size_t cap = kDefaultExactAtomCap;
  std::size_t restarts = 20;
  std::uint64_t seed = 1;
  std::set<CandidateFamily> families = {CandidateFamily::distance_to_point,
                                        CandidateFamily::distance_to_set,
                                        CandidateFamily::mcshane_random};
};

struct LcjRatioResult {
  double ratio = 0.0;  // LVar estimate / pair variation
  LVarResult lvar;
  double variation = 0.0;
};

LcjRatioResult lcj_ratio(const FiniteMetricSpace& space, const PairMeasure& mu, LVarMethod method,
                         const LcjRatioOptions& options = {});

// sum_j sum_i w_i |<x_i - y_i, e_j>|: the coordinate-projection certificate
// Var <= d * LVar. Euclidean hosts only.
double coordinate_projection_bound(const FiniteMetricSpace& space, const PairMeasure& mu);

struct RandomProjectionBound {
  double mean = 0.0;
  double stderr_ = 0.0;
};

// Monte Carlo over h = d^{-1/2} (±1, ..., ±1): each draw scores a valid
// 1-Lipschitz linear functional, so the mean is a lower-bound estimate.
RandomProjectionBound random_projection_bound(const FiniteMetricSpace& space, const PairMeasure& mu,
                                              std::size_t trials, std::uint64_t seed);

}  // namespace lcj
