#pragma once

#include <cstddef>
#include <vector>

#include "lcjlab/lipschitz.hpp"
#include "lcjlab/metric_space.hpp"

namespace lcj {

// Balanced signed measure: one charge per point, total zero within 1e-12.
struct SignedMeasure {
  std::vector<double> charge;
};

struct TransportFlow {
  std::size_t source = 0, sink = 0;  // point indices
  double amount = 0.0;
};

struct TransportPlan {
  std::vector<TransportFlow> flows;
  double cost = 0.0;
};

struct KantorovichResult {
  double value = 0.0;
  TransportPlan plan;
  LipschitzFunction potentials;  // 1-Lipschitz on the whole space, sum c_p f(p) = value
};

// Min-cost transport between the positive and negative parts of c with
// ground cost dist. Solver: successive shortest paths with node potentials
// on the bipartite support graph. The dual witness is recovered from the
// optimal plan by difference constraints and McShane-extended to every
// point; the duality gap is checked on each call.
KantorovichResult kantorovich_value(const FiniteMetricSpace& space, const SignedMeasure& c);

// Value-only variant used inside enumeration loops: charges given sparsely
// over `points` (indices into the space). Skips witness extraction.
double transport_value_sparse(const FiniteMetricSpace& space, const std::vector<std::size_t>& points,
                              const std::vector<double>& charges);

}  // namespace lcj
