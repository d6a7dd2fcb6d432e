#include "lcjlab/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <unordered_map>

namespace lcj {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> flat_dist)
    : labels_(std::move(labels)), dist_(std::move(flat_dist)) {
  std::size_t n = labels_.size();
  if (dist_.size() != n * n) throw ValidationError("metric space: matrix size does not match label count");
  for (double d : dist_)
    if (!std::isfinite(d)) throw ValidationError("metric space: non-finite distance entry");
}

std::optional<std::size_t> FiniteMetricSpace::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t FiniteMetricSpace::index_of(const std::string& label) const {
  auto i = find(label);
  if (!i) throw ValidationError("metric space: unknown point label '" + label + "'");
  return *i;
}

double FiniteMetricSpace::diameter() const {
  double d = 0.0;
  for (double x : dist_) d = std::max(d, x);
  return d;
}

MetricValidationReport validate_metric(const std::vector<std::vector<double>>& matrix, double tol) {
  std::size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw ValidationError("validate_metric: matrix is not square");
    for (double x : row)
      if (!std::isfinite(x)) throw ValidationError("validate_metric: non-finite entry");
  }
  MetricValidationReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i][i] != 0.0) rep.diagonal_errors.push_back(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      double gap = std::abs(matrix[i][j] - matrix[j][i]);
      if (gap > tol) rep.symmetry_errors.push_back({i, j, gap});
      if (matrix[i][j] <= 0.0) rep.nonpositive_errors.push_back({i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        double slack = matrix[i][k] - matrix[i][j] - matrix[j][k];
        if (slack > tol) rep.violations.push_back({i, j, k, slack});
      }
    }
  rep.valid = rep.violations.empty() && rep.symmetry_errors.empty() && rep.diagonal_errors.empty() &&
              rep.nonpositive_errors.empty();
  return rep;
}

MetricValidationReport validate_metric(const FiniteMetricSpace& space, double tol) {
  std::size_t n = space.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = space.dist(i, j);
  return validate_metric(rows, tol);
}

namespace {

// Single-source shortest paths; BFS for unit weights, Dijkstra otherwise.
std::vector<double> shortest_from(std::size_t src, std::size_t n,
                                  const std::vector<std::vector<std::pair<std::size_t, double>>>& adj,
                                  bool unit_weights) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  dist[src] = 0.0;
  if (unit_weights) {
    std::queue<std::size_t> q;
    q.push(src);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (auto [v, w] : adj[u])
        if (dist[v] == kInf) {
          dist[v] = dist[u] + 1.0;
          q.push(v);
        }
    }
  } else {
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.push({0.0, src});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        double nd = d + w;
        if (nd < dist[v]) {
          dist[v] = nd;
          heap.push({nd, v});
        }
      }
    }
  }
  return dist;
}

}  // namespace

FiniteMetricSpace from_weighted_graph(const std::vector<std::string>& vertex_labels,
                                      const std::vector<WeightedEdge>& edges, double scale) {
  std::size_t n = vertex_labels.size();
  if (n == 0) throw ValidationError("from_weighted_graph: empty vertex set");
  if (scale <= 0.0) throw ValidationError("from_weighted_graph: scale must be positive");
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  bool unit_weights = true;
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) throw ValidationError("from_weighted_graph: edge endpoint out of range");
    if (!(e.weight > 0.0)) throw ValidationError("from_weighted_graph: edge weights must be positive");
    if (e.weight != 1.0) unit_weights = false;
    adj[e.u].push_back({e.v, e.weight});
    adj[e.v].push_back({e.u, e.weight});
  }
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    auto d = shortest_from(s, n, adj, unit_weights);
    for (std::size_t t = 0; t < n; ++t) {
      if (!std::isfinite(d[t]))
        throw ValidationError("from_weighted_graph: graph is disconnected, no path from '" +
                              vertex_labels[s] + "' to '" + vertex_labels[t] + "'");
      flat[s * n + t] = d[t] * scale;
    }
  }
  FiniteMetricSpace space(vertex_labels, std::move(flat));
  GraphProvenance prov;
  prov.scale = scale;
  for (const auto& e : edges)
    prov.edges.push_back({static_cast<double>(e.u), static_cast<double>(e.v), e.weight});
  space.graph = std::move(prov);
  return space;
}

FiniteMetricSpace from_euclidean(const std::vector<std::vector<double>>& points,
                                 std::vector<std::string> labels) {
  std::size_t n = points.size();
  if (n == 0) throw ValidationError("from_euclidean: empty point set");
  std::size_t dim = points[0].size();
  for (const auto& p : points)
    if (p.size() != dim) throw ValidationError("from_euclidean: points have mixed dimensions");
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  }
  if (labels.size() != n) throw ValidationError("from_euclidean: label count mismatch");
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        double d = points[i][k] - points[j][k];
        s += d * d;
      }
      double d = std::sqrt(s);
      if (d == 0.0)
        throw ValidationError("from_euclidean: duplicate points '" + labels[i] + "' and '" +
                              labels[j] + "' (zero off-diagonal distance)");
      flat[i * n + j] = flat[j * n + i] = d;
    }
  FiniteMetricSpace space(std::move(labels), std::move(flat));
  space.coords = points;
  return space;
}

FiniteMetricSpace restrict(const FiniteMetricSpace& space, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw ValidationError("restrict: empty subset");
  std::size_t m = subset.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i : subset) {
    if (i >= space.size()) throw ValidationError("restrict: index out of range");
    labels.push_back(space.label(i));
  }
  std::vector<double> flat(m * m, 0.0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) flat[a * m + b] = space.dist(subset[a], subset[b]);
  FiniteMetricSpace out(std::move(labels), std::move(flat));
  if (space.coords) {
    std::vector<std::vector<double>> pts;
    pts.reserve(m);
    for (std::size_t i : subset) pts.push_back((*space.coords)[i]);
    out.coords = std::move(pts);
  }
  return out;
}

FiniteMetricSpace scale_space(const FiniteMetricSpace& space, double lambda) {
  if (!(lambda > 0.0)) throw ValidationError("scale_space: lambda must be positive");
  std::vector<double> flat = space.flat();
  for (double& d : flat) d *= lambda;
  FiniteMetricSpace out(space.labels(), std::move(flat));
  if (space.coords) {
    auto pts = *space.coords;
    for (auto& p : pts)
      for (double& x : p) x *= lambda;
    out.coords = std::move(pts);
  }
  return out;
}

UltrametricCheck is_ultrametric(const FiniteMetricSpace& space, double tol) {
  std::size_t n = space.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (space.dist(i, k) > std::max(space.dist(i, j), space.dist(j, k)) + tol)
          return {false, std::array<std::size_t, 3>{i, k, j}};
      }
    }
  return {true, std::nullopt};
}

std::size_t estimate_doubling(const FiniteMetricSpace& space) {
  std::size_t n = space.size();
  if (n <= 1) return n;
  std::set<double> radii;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) radii.insert(space.dist(i, j));
  std::size_t worst = 1;
  std::vector<std::size_t> ball;
  for (std::size_t center = 0; center < n; ++center) {
    for (double r : radii) {
      ball.clear();
      for (std::size_t y = 0; y < n; ++y)
        if (space.dist(center, y) <= r) ball.push_back(y);
      // greedy max-coverage (r/2)-cover, centers anywhere, lowest index on ties
      std::vector<bool> covered(ball.size(), false);
      std::size_t remaining = ball.size();
      std::size_t count = 0;
      while (remaining > 0) {
        std::size_t best_center = 0, best_gain = 0;
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t gain = 0;
          for (std::size_t b = 0; b < ball.size(); ++b)
            if (!covered[b] && space.dist(c, ball[b]) <= r / 2.0) ++gain;
          if (gain > best_gain) {
            best_gain = gain;
            best_center = c;
          }
        }
        if (best_gain == 0) break;  // cannot happen: each point covers itself
        ++count;
        for (std::size_t b = 0; b < ball.size(); ++b)
          if (!covered[b] && space.dist(best_center, ball[b]) <= r / 2.0) {
            covered[b] = true;
            --remaining;
          }
      }
      worst = std::max(worst, count);
    }
  }
  return worst;
}

}  // namespace lcj
