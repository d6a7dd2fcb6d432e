#include "lcjlab/variation.hpp"

#include <cmath>

#include "lcjlab/numeric.hpp"

namespace lcj {

void validate_pair_measure(const FiniteMetricSpace& space, const PairMeasure& mu) {
  if (mu.atoms.empty()) throw ValidationError("pair measure: empty atom list");
  for (const auto& a : mu.atoms) {
    if (a.x >= space.size() || a.y >= space.size())
      throw ValidationError("pair measure: atom index out of range");
    if (a.x == a.y)
      throw ValidationError("pair measure: diagonal atom at '" + space.label(a.x) + "'");
    if (!(a.weight > 0.0) || !std::isfinite(a.weight))
      throw ValidationError("pair measure: weights must be positive and finite");
  }
}

double var_of_curve(const FiniteMetricSpace& space, const StepCurve& curve) {
  if (curve.points.empty()) throw ValidationError("var_of_curve: empty curve");
  for (std::size_t p : curve.points)
    if (p >= space.size()) throw ValidationError("var_of_curve: point index out of range");
  KahanSum s;
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    s.add(space.dist(curve.points[i - 1], curve.points[i]));
  return s.value();
}

double pair_variation(const FiniteMetricSpace& space, const PairMeasure& mu) {
  validate_pair_measure(space, mu);
  KahanSum s;
  for (const auto& a : mu.atoms) s.add(a.weight * space.dist(a.x, a.y));
  return s.value();
}

PairMeasure pairs_from_curve(const FiniteMetricSpace& space, const StepCurve& curve) {
  if (curve.points.size() < 2) throw ValidationError("pairs_from_curve: curve must have length >= 2");
  std::vector<std::size_t> jumps;
  jumps.push_back(curve.points.front());
  for (std::size_t i = 1; i < curve.points.size(); ++i)
    if (curve.points[i] != jumps.back()) jumps.push_back(curve.points[i]);
  if (jumps.size() < 2)
    throw ValidationError("pairs_from_curve: all points equal, the pair measure would be empty");
  PairMeasure mu;
  for (std::size_t i = 1; i < jumps.size(); ++i) mu.atoms.push_back({jumps[i - 1], jumps[i], 1.0});
  validate_pair_measure(space, mu);
  return mu;
}

StepCurve curve_from_pairs(const FiniteMetricSpace& space, const PairMeasure& mu, int K) {
  validate_pair_measure(space, mu);
  if (K < 1) throw ValidationError("curve_from_pairs: K must be at least 1");
  for (const auto& a : mu.atoms)
    if (a.weight != 1.0)
      throw ValidationError("curve_from_pairs: only unit weights; handle general weights at the measure level");
  StepCurve curve;
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const auto& a = mu.atoms[i];
    if (curve.points.empty() || curve.points.back() != a.x) curve.points.push_back(a.x);
    // 2K jumps across (x, y), ending back at x
    for (int k = 0; k < K; ++k) {
      curve.points.push_back(a.y);
      curve.points.push_back(a.x);
    }
  }
  return curve;
}

StepCurve concatenate_curves(const std::vector<StepCurve>& curves) {
  if (curves.empty()) throw ValidationError("concatenate_curves: empty curve list");
  StepCurve out;
  for (const auto& c : curves) {
    if (c.points.empty()) throw ValidationError("concatenate_curves: component curve is empty");
    out.points.insert(out.points.end(), c.points.begin(), c.points.end());
  }
  return out;
}

}  // namespace lcj
