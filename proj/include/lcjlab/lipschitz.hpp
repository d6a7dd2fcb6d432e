#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lcjlab/metric_space.hpp"
#include "lcjlab/rng.hpp"

namespace lcj {

// Tabulated real function on the points of a space, together with a bound on
// its Lipschitz constant that the producer certifies.
struct LipschitzFunction {
  std::vector<double> values;
  double certified_L = 0.0;
};

struct LipschitzConstant {
  double L = 0.0;
  std::size_t witness_i = 0, witness_j = 0;  // pair attaining the maximum
};

// Exhaustive max over pairs of |f(i) - f(j)| / dist(i, j). Needs n >= 2.
LipschitzConstant lipschitz_constant(const FiniteMetricSpace& space,
                                     const std::vector<double>& values);

// True iff |values[i] - values[j]| <= L * dist(i,j) + tol for all pairs.
bool check_lipschitz(const FiniteMetricSpace& space, const std::vector<double>& values, double L,
                     double tol = 1e-9);

// f(x) = min over anchors p of (g(p) + L * dist(x, p)). Extends an
// L-Lipschitz g from the anchor set to the whole space without increasing
// the constant; agrees with g on the anchors.
LipschitzFunction mcshane_extend(const FiniteMetricSpace& space,
                                 const std::vector<std::size_t>& anchors,
                                 const std::vector<double>& anchor_values, double L);

// Random 1-Lipschitz function: random values on a random anchor subset,
// repaired by the McShane envelope. Used by local search baselines and the
// certificate samplers.
LipschitzFunction random_lipschitz(const FiniteMetricSpace& space, Rng& rng);

}  // namespace lcj
