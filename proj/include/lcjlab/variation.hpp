#pragma once

#include <cstddef>
#include <vector>

#include "lcjlab/metric_space.hpp"

namespace lcj {

// Piecewise-constant curve represented by its jump sequence. Sampling a
// finite-jump curve at all of its jumps attains the partition supremum in the
// variation, so the finite sum below is the exact variation.
struct StepCurve {
  std::vector<std::size_t> points;  // indices into a host space, length >= 1
};

struct PairAtom {
  std::size_t x = 0, y = 0;  // x != y
  double weight = 1.0;       // > 0
};

// Finitely supported nonnegative measure on ordered point pairs, kept off the
// diagonal.
struct PairMeasure {
  std::vector<PairAtom> atoms;
};

// Throws ValidationError on diagonal atoms, nonpositive weights, bad indices
// or an empty atom list.
void validate_pair_measure(const FiniteMetricSpace& space, const PairMeasure& mu);

// Sum of consecutive distances along the jump sequence.
double var_of_curve(const FiniteMetricSpace& space, const StepCurve& curve);

// Integral of the distance against the measure: sum of w * dist(x, y).
double pair_variation(const FiniteMetricSpace& space, const PairMeasure& mu);

// Consecutive pairs of the curve as unit-weight atoms; consecutive duplicate
// points are dropped first. pair_variation of the result equals var_of_curve
// of the input.
PairMeasure pairs_from_curve(const FiniteMetricSpace& space, const StepCurve& curve);

// The oscillating curve that realizes a unit-weight pair list: visits x_1,
// crosses (x_1, y_1) exactly 2K times, moves to x_2, and so on. Its variation
// is at least 2K times the pair variation; the transfer legs add the rest.
StepCurve curve_from_pairs(const FiniteMetricSpace& space, const PairMeasure& mu, int K);

// Joins curves in one host space end to start.
StepCurve concatenate_curves(const std::vector<StepCurve>& curves);

}  // namespace lcj
