#pragma once

#include <string>

#include "lcjlab/lvar.hpp"
#include "lcjlab/metric_space.hpp"
#include "lcjlab/variation.hpp"

namespace lcj::io {

// Space file: { "version": 1, "labels": [...], "dist": [[...]] } plus the
// optional "graph" and "coords" provenance blocks. Readers re-validate the
// matrix; writers always emit the full matrix.
std::string space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const std::string& text, double tol = kDefaultMetricTol);

// PairMeasure file: { "atoms": [[xLabel, yLabel, w], ...] }.
std::string pair_measure_to_json(const FiniteMetricSpace& space, const PairMeasure& mu);
PairMeasure pair_measure_from_json(const FiniteMetricSpace& space, const std::string& text);

// StepCurve file: { "points": [label, ...] }.
std::string curve_to_json(const FiniteMetricSpace& space, const StepCurve& curve);
StepCurve curve_from_json(const FiniteMetricSpace& space, const std::string& text);

std::string lvar_result_to_json(const FiniteMetricSpace& space, const LVarResult& result,
                                double variation, const std::string& method, double runtime_ms);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace lcj::io
