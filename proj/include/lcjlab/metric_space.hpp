#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcjlab/errors.hpp"

namespace lcj {

inline constexpr double kDefaultMetricTol = 1e-9;

// Provenance for spaces built from weighted graphs; kept so files can record
// how the matrix was produced.
struct GraphProvenance {
  std::vector<std::array<double, 3>> edges;  // (u, v, weight) by vertex index
  double scale = 1.0;
};

// Labeled point set with a full distance matrix. The universal substrate:
// all curves, measures and optimizers work against one of these. Values are
// immutable after construction and safe to share across threads.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> flat_dist);

  std::size_t size() const { return labels_.size(); }
  double dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& flat() const { return dist_; }

  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws ValidationError

  double diameter() const;

  // Optional provenance blocks; writers emit them, readers accept them.
  std::optional<std::vector<std::vector<double>>> coords;  // Euclidean hosts
  std::optional<GraphProvenance> graph;

 private:
  std::vector<std::string> labels_;
  std::vector<double> dist_;  // n*n row-major
};

struct TriangleViolation {
  std::size_t i, j, k;  // dist(i,k) > dist(i,j) + dist(j,k) + tol
  double slack;         // amount by which the inequality fails
};

struct SymmetryError {
  std::size_t i, j;
  double gap;  // |dist(i,j) - dist(j,i)|
};

struct MetricValidationReport {
  bool valid = false;
  std::vector<TriangleViolation> violations;
  std::vector<SymmetryError> symmetry_errors;
  std::vector<std::size_t> diagonal_errors;             // i with dist(i,i) != 0
  std::vector<std::pair<std::size_t, std::size_t>> nonpositive_errors;  // i != j with dist <= 0
};

// Checks diagonal, symmetry, positivity and every triangle against tol.
// Matrix given as rows; must be square with finite entries.
MetricValidationReport validate_metric(const std::vector<std::vector<double>>& matrix,
                                       double tol = kDefaultMetricTol);
MetricValidationReport validate_metric(const FiniteMetricSpace& space,
                                       double tol = kDefaultMetricTol);

struct WeightedEdge {
  std::size_t u, v;
  double weight;
};

// All-pairs shortest-path metric of a connected weighted graph, scaled.
// With integer weights the path sums are exact and only the final
// multiplication by `scale` rounds.
FiniteMetricSpace from_weighted_graph(const std::vector<std::string>& vertex_labels,
                                      const std::vector<WeightedEdge>& edges, double scale = 1.0);

// Euclidean distance matrix; stores the coordinates as provenance.
// Duplicate points are rejected: pair measures need positive off-diagonal
// distances.
FiniteMetricSpace from_euclidean(const std::vector<std::vector<double>>& points,
                                 std::vector<std::string> labels = {});

// Submatrix on a nonempty subset of points.
FiniteMetricSpace restrict(const FiniteMetricSpace& space, const std::vector<std::size_t>& subset);

// All distances multiplied by lambda > 0.
FiniteMetricSpace scale_space(const FiniteMetricSpace& space, double lambda);

struct UltrametricCheck {
  bool is_ultrametric = false;
  std::optional<std::array<std::size_t, 3>> witness;  // (i, k, j): dist(i,k) > max(dist(i,j), dist(j,k)) + tol
};

UltrametricCheck is_ultrametric(const FiniteMetricSpace& space, double tol = 0.0);

// Greedy upper estimate of sup_x N_r(x): for every center and every radius
// occurring in the matrix, cover the ball with (r/2)-balls greedily and take
// the largest count. Diagnostic only; greedy covers are not minimal.
std::size_t estimate_doubling(const FiniteMetricSpace& space);

}  // namespace lcj
