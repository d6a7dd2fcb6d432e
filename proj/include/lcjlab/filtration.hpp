#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcjlab/rational.hpp"

namespace lcj {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct FiltrationAtom {
  Rational prob;                  // exact; equal within a level
  std::size_t parent = kNoParent; // index into the previous level
};

// Increasing sequence of finite partitions. Level 0 partitions the space;
// each deeper level refines its parent and the child probabilities of an
// atom sum to the parent's.
struct Filtration {
  std::vector<std::vector<FiltrationAtom>> levels;

  std::size_t level_count() const { return levels.size(); }
  void validate() const;  // throws PropertyError on a structural defect
};

// Level-indexed values, constant on atoms; E(M_{n+1} | F_n) = M_n.
struct MartingaleSeq {
  std::vector<std::vector<double>> values;  // aligned with the filtration levels
};

struct MartingaleCheck {
  bool ok = false;
  double max_gap = 0.0;       // worst |E(M_{n+1}|F_n) - M_n| over atoms
  std::string worst_atom;     // "level/index" of the worst parent atom
};

MartingaleCheck check_martingale(const Filtration& f, const MartingaleSeq& m, double tol = 1e-10);

// The dyadic filtration of [0,1): level n has the 2^n dyadic intervals.
Filtration dyadic_filtration(int levels);

// M_n(t) = 2^n (f(k 2^{-n}) - f((k-1) 2^{-n})) on the k-th dyadic interval,
// built from f tabulated on the grid {k 2^{-N}}. If f is L-Lipschitz on the
// grid then max |M| <= L.
MartingaleSeq dyadic_martingale(const std::vector<double>& grid_values, int levels);

struct OrthogonalityReport {
  bool ok = false;
  double max_correlation = 0.0;  // max over m != n of |E dM_n dM_m|
  int worst_n = 0, worst_m = 0;
};

// E(dM_n . dM_m) = 0 for m != n; differences taken against the filtration.
// Expectations use the exact rational probabilities.
OrthogonalityReport check_orthogonality(const Filtration& f, const MartingaleSeq& m,
                                        double tol = 1e-10);

struct SqrtNCheck {
  double lhs = 0.0;  // sum_{n=1}^N E|dM_n|
  double rhs = 0.0;  // sqrt(N) * max |M|
  bool pass = false;
};

SqrtNCheck sqrtN_inequality_check(const Filtration& f, const MartingaleSeq& m, double tol = 1e-10);

// E|dM_{n+1}| restricted to one level-n atom (n = level of `atom`).
double expected_abs_increment(const Filtration& f, const MartingaleSeq& m, std::size_t level,
                              std::size_t atom);

}  // namespace lcj
