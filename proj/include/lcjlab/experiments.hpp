#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lcjlab/lvar.hpp"

namespace lcj {

// Rectangular result table with a fixed column order. Cells are already
// formatted; re-running a configuration reproduces the bytes.
struct ResultTable {
  std::string kind;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  double total_runtime_ms = 0.0;  // JSON metadata only; the CSV bytes must not
                                  // depend on the clock

  std::string to_csv() const;
  std::string to_json() const;
};

std::string format_cell(double v);  // %.12g, shared by every emitter

struct ExperimentConfig {
  std::string kind;                 // sphere | levy | tree | laakso | euclid_lower | ultrametric
  std::vector<int> dims = {2, 3, 4, 6};
  std::size_t pairs = 10;           // sphere pairs per instance
  std::vector<int> depths = {1, 2, 3};
  std::vector<int> leaf_depths = {2, 4, 6, 8, 10, 12, 14, 16};
  double q = 0.2;
  double epsilon = 0.3;
  std::size_t trials = 100000;
  std::size_t function_samples = 1000;  // random Lipschitz f per certificate
  std::uint64_t seed = 1;
  std::string method = "exact";     // sphere LVar method
  std::string f_kind = "coordinate";
  int threads = 1;
};

ResultTable exp_sphere(const ExperimentConfig& config);
ResultTable exp_levy_probe(const ExperimentConfig& config);
ResultTable exp_tree(const ExperimentConfig& config);
ResultTable exp_laakso(const ExperimentConfig& config);
ResultTable exp_euclid_lower(const ExperimentConfig& config);
ResultTable exp_ultrametric(const ExperimentConfig& config);

ResultTable run_experiment(const ExperimentConfig& config);

// Leaf-space certificate via the distance-class structure: pairs at the same
// separation scale share the exact expectation, so the minimum runs over the
// depth many classes instead of all leaf pairs. Depths beyond the
// materialization cap stay reachable this way.
double tree_leaf_certificate_by_class(int depth, double q);

}  // namespace lcj
