#include "lcjlab/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lcj {

LipschitzConstant lipschitz_constant(const FiniteMetricSpace& space,
                                     const std::vector<double>& values) {
  std::size_t n = space.size();
  if (values.size() != n) throw ValidationError("lipschitz_constant: one value per point required");
  if (n < 2) throw ValidationError("lipschitz_constant: need at least two points");
  LipschitzConstant out;
  out.witness_i = 0;
  out.witness_j = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double ratio = std::abs(values[i] - values[j]) / space.dist(i, j);
      if (ratio > out.L) {
        out.L = ratio;
        out.witness_i = i;
        out.witness_j = j;
      }
    }
  return out;
}

bool check_lipschitz(const FiniteMetricSpace& space, const std::vector<double>& values, double L,
                     double tol) {
  std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) > L * space.dist(i, j) + tol) return false;
  return true;
}

LipschitzFunction mcshane_extend(const FiniteMetricSpace& space,
                                 const std::vector<std::size_t>& anchors,
                                 const std::vector<double>& anchor_values, double L) {
  if (anchors.empty()) throw ValidationError("mcshane_extend: empty anchor set");
  if (anchors.size() != anchor_values.size())
    throw ValidationError("mcshane_extend: anchor/value count mismatch");
  if (L < 0.0) throw ValidationError("mcshane_extend: negative Lipschitz bound");
  for (std::size_t a = 0; a < anchors.size(); ++a)
    for (std::size_t b = a + 1; b < anchors.size(); ++b) {
      double gap = std::abs(anchor_values[a] - anchor_values[b]);
      double allowed = L * space.dist(anchors[a], anchors[b]);
      if (gap > allowed + 1e-12 * std::max(1.0, gap))
        throw ValidationError("mcshane_extend: anchor values violate the bound on pair ('" +
                              space.label(anchors[a]) + "', '" + space.label(anchors[b]) + "')");
    }
  LipschitzFunction f;
  f.certified_L = L;
  f.values.resize(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < anchors.size(); ++a)
      best = std::min(best, anchor_values[a] + L * space.dist(x, anchors[a]));
    f.values[x] = best;
  }
  return f;
}

LipschitzFunction random_lipschitz(const FiniteMetricSpace& space, Rng& rng) {
  std::size_t n = space.size();
  double diam = std::max(space.diameter(), 1e-3);
  std::size_t count = 1 + rng.next_index(0, std::min<std::size_t>(n, 16) - 1);
  std::vector<std::size_t> anchors(count);
  std::vector<double> raw(count);
  for (std::size_t a = 0; a < count; ++a) {
    anchors[a] = rng.next_index(0, n - 1);
    raw[a] = rng.next_uniform(-diam, diam);
  }
  // envelope of arbitrary values is 1-Lipschitz regardless of the raw data
  LipschitzFunction f;
  f.certified_L = 1.0;
  f.values.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < count; ++a)
      best = std::min(best, raw[a] + space.dist(x, anchors[a]));
    f.values[x] = best;
  }
  return f;
}

}  // namespace lcj
