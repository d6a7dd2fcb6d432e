#include "lcjlab/filtration.hpp"

#include <algorithm>
#include <cmath>

#include "lcjlab/errors.hpp"
#include "lcjlab/numeric.hpp"

namespace lcj {

void Filtration::validate() const {
  if (levels.empty()) throw PropertyError("filtration: no levels");
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (levels[n].empty()) throw PropertyError("filtration: empty level " + std::to_string(n));
    Rational total(0);
    const Rational& first = levels[n][0].prob;
    for (const auto& atom : levels[n]) {
      if (atom.prob != first)
        throw PropertyError("filtration: unequal atom probabilities at level " + std::to_string(n));
      total += atom.prob;
      if (n == 0) {
        if (atom.parent != kNoParent) throw PropertyError("filtration: level 0 atom has a parent");
      } else if (atom.parent >= levels[n - 1].size()) {
        throw PropertyError("filtration: bad parent index at level " + std::to_string(n));
      }
    }
    if (total != Rational(1))
      throw PropertyError("filtration: level " + std::to_string(n) + " probabilities sum to " +
                          total.str());
  }
  // children masses recompose the parents
  for (std::size_t n = 1; n < levels.size(); ++n) {
    std::vector<Rational> mass(levels[n - 1].size(), Rational(0));
    for (const auto& atom : levels[n]) mass[atom.parent] += atom.prob;
    for (std::size_t a = 0; a < mass.size(); ++a)
      if (mass[a] != levels[n - 1][a].prob)
        throw PropertyError("filtration: child masses do not sum to parent at level " +
                            std::to_string(n - 1) + "/" + std::to_string(a));
  }
}

MartingaleCheck check_martingale(const Filtration& f, const MartingaleSeq& m, double tol) {
  if (m.values.size() != f.level_count())
    throw ValidationError("check_martingale: level count mismatch");
  for (std::size_t n = 0; n < f.level_count(); ++n)
    if (m.values[n].size() != f.levels[n].size())
      throw ValidationError("check_martingale: atom count mismatch at level " + std::to_string(n));
  MartingaleCheck out;
  out.ok = true;
  for (std::size_t n = 1; n < f.level_count(); ++n) {
    std::size_t parents = f.levels[n - 1].size();
    std::vector<double> acc(parents, 0.0);
    for (std::size_t a = 0; a < f.levels[n].size(); ++a) {
      const auto& atom = f.levels[n][a];
      double share = (atom.prob / f.levels[n - 1][atom.parent].prob).to_double();
      acc[atom.parent] += share * m.values[n][a];
    }
    for (std::size_t p = 0; p < parents; ++p) {
      double gap = std::abs(acc[p] - m.values[n - 1][p]);
      if (gap > out.max_gap) {
        out.max_gap = gap;
        out.worst_atom = std::to_string(n - 1) + "/" + std::to_string(p);
      }
    }
  }
  out.ok = out.max_gap <= tol;
  return out;
}

Filtration dyadic_filtration(int levels) {
  if (levels < 0) throw ValidationError("dyadic_filtration: negative level count");
  Filtration f;
  f.levels.resize(levels + 1);
  for (int n = 0; n <= levels; ++n) {
    std::size_t count = std::size_t{1} << n;
    f.levels[n].resize(count);
    Rational prob = Rational(1) / Rational::pow2(n);
    for (std::size_t k = 0; k < count; ++k)
      f.levels[n][k] = {prob, n == 0 ? kNoParent : k / 2};
  }
  return f;
}

MartingaleSeq dyadic_martingale(const std::vector<double>& grid_values, int levels) {
  std::size_t grid = (std::size_t{1} << levels) + 1;
  if (grid_values.size() != grid)
    throw ValidationError("dyadic_martingale: need f on all " + std::to_string(grid) +
                          " grid points");
  MartingaleSeq m;
  m.values.resize(levels + 1);
  for (int n = 0; n <= levels; ++n) {
    std::size_t count = std::size_t{1} << n;
    std::size_t stride = (grid - 1) >> n;
    double scale = std::ldexp(1.0, n);  // 2^n, exact
    m.values[n].resize(count);
    for (std::size_t k = 0; k < count; ++k)
      m.values[n][k] = scale * (grid_values[(k + 1) * stride] - grid_values[k * stride]);
  }
  return m;
}

namespace {

// dM_n values on level-n atoms (n >= 1), via the parent chain.
std::vector<double> differences(const Filtration& f, const MartingaleSeq& m, std::size_t n) {
  std::vector<double> d(f.levels[n].size());
  for (std::size_t a = 0; a < d.size(); ++a)
    d[a] = m.values[n][a] - m.values[n - 1][f.levels[n][a].parent];
  return d;
}

// ancestor of the level-n atom `a` at level `target` <= n
std::size_t ancestor(const Filtration& f, std::size_t n, std::size_t a, std::size_t target) {
  while (n > target) {
    a = f.levels[n][a].parent;
    --n;
  }
  return a;
}

}  // namespace

OrthogonalityReport check_orthogonality(const Filtration& f, const MartingaleSeq& m, double tol) {
  auto mc = check_martingale(f, m, 1e-10);
  if (!mc.ok)
    throw ValidationError("check_orthogonality: input is not a martingale, worst atom " +
                          mc.worst_atom + " with gap " + std::to_string(mc.max_gap));
  OrthogonalityReport out;
  std::size_t L = f.level_count();
  std::vector<std::vector<double>> dm(L);
  for (std::size_t n = 1; n < L; ++n) dm[n] = differences(f, m, n);
  for (std::size_t n = 1; n < L; ++n)
    for (std::size_t mm = n + 1; mm < L; ++mm) {
      KahanSum e;
      for (std::size_t a = 0; a < f.levels[mm].size(); ++a) {
        std::size_t anc = ancestor(f, mm, a, n);
        e.add(f.levels[mm][a].prob.to_double() * dm[mm][a] * dm[n][anc]);
      }
      double corr = std::abs(e.value());
      if (corr > out.max_correlation) {
        out.max_correlation = corr;
        out.worst_n = static_cast<int>(n);
        out.worst_m = static_cast<int>(mm);
      }
    }
  out.ok = out.max_correlation <= tol;
  return out;
}

SqrtNCheck sqrtN_inequality_check(const Filtration& f, const MartingaleSeq& m, double tol) {
  auto mc = check_martingale(f, m, 1e-10);
  if (!mc.ok)
    throw ValidationError("sqrtN_inequality_check: input is not a martingale, worst atom " +
                          mc.worst_atom);
  SqrtNCheck out;
  std::size_t L = f.level_count();
  KahanSum lhs;
  for (std::size_t n = 1; n < L; ++n) {
    auto dm = differences(f, m, n);
    KahanSum level;
    for (std::size_t a = 0; a < dm.size(); ++a)
      level.add(f.levels[n][a].prob.to_double() * std::abs(dm[a]));
    lhs.add(level.value());
  }
  double max_abs = 0.0;
  for (const auto& level : m.values)
    for (double v : level) max_abs = std::max(max_abs, std::abs(v));
  out.lhs = lhs.value();
  out.rhs = std::sqrt(static_cast<double>(L - 1)) * max_abs;
  out.pass = out.lhs <= out.rhs + tol;
  return out;
}

double expected_abs_increment(const Filtration& f, const MartingaleSeq& m, std::size_t level,
                              std::size_t atom) {
  if (level + 1 >= f.level_count())
    throw ValidationError("expected_abs_increment: no finer level");
  KahanSum e;
  for (std::size_t a = 0; a < f.levels[level + 1].size(); ++a) {
    const auto& child = f.levels[level + 1][a];
    if (child.parent != atom) continue;
    e.add(child.prob.to_double() * std::abs(m.values[level + 1][a] - m.values[level][atom]));
  }
  return e.value();
}

}  // namespace lcj
