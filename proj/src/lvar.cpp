#include "lcjlab/lvar.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "lcjlab/numeric.hpp"
#include "lcjlab/rng.hpp"
#include "lcjlab/ultrametric.hpp"

namespace lcj {

namespace {

struct SupportIndex {
  std::vector<std::size_t> points;                       // unique point ids
  std::vector<std::pair<std::size_t, std::size_t>> at;   // per atom: (x, y) as support positions
};

SupportIndex build_support(const FiniteMetricSpace& space, const PairMeasure& mu) {
  validate_pair_measure(space, mu);
  SupportIndex s;
  std::unordered_map<std::size_t, std::size_t> pos;
  auto intern = [&](std::size_t p) {
    auto it = pos.find(p);
    if (it != pos.end()) return it->second;
    std::size_t id = s.points.size();
    s.points.push_back(p);
    pos.emplace(p, id);
    return id;
  };
  for (const auto& a : mu.atoms) s.at.push_back({intern(a.x), intern(a.y)});
  return s;
}

void accumulate_charges(const PairMeasure& mu, const SupportIndex& s, const std::vector<int>& signs,
                        std::vector<double>& charges) {
  std::fill(charges.begin(), charges.end(), 0.0);
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    double w = signs[i] * mu.atoms[i].weight;
    charges[s.at[i].first] += w;
    charges[s.at[i].second] -= w;
  }
}

double signed_value(const FiniteMetricSpace& space, const PairMeasure& mu, const SupportIndex& s,
                    const std::vector<int>& signs, std::vector<double>& scratch) {
  accumulate_charges(mu, s, signs, scratch);
  return transport_value_sparse(space, s.points, scratch);
}

LVarResult finish_with_witness(const FiniteMetricSpace& space, const PairMeasure& mu,
                               const std::vector<int>& signs, bool exact) {
  SignedMeasure c;
  c.charge.assign(space.size(), 0.0);
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    double w = signs[i] * mu.atoms[i].weight;
    c.charge[mu.atoms[i].x] += w;
    c.charge[mu.atoms[i].y] -= w;
  }
  KantorovichResult kr = kantorovich_value(space, c);
  LVarResult out;
  out.value = kr.value;
  out.witness = std::move(kr.potentials);
  out.signs = signs;
  out.exact = exact;
  if (exact) {
    KahanSum check;
    for (const auto& a : mu.atoms)
      check.add(a.weight * std::abs(out.witness.values[a.x] - out.witness.values[a.y]));
    if (std::abs(check.value() - out.value) > 1e-9 * std::max(1.0, std::abs(out.value)))
      throw PropertyError("lvar: witness oscillation does not reproduce the optimum");
  }
  return out;
}

double score_candidate(const PairMeasure& mu, const std::vector<double>& values) {
  KahanSum s;
  for (const auto& a : mu.atoms) s.add(a.weight * std::abs(values[a.x] - values[a.y]));
  return s.value();
}

}  // namespace

LVarResult lvar_exact(const FiniteMetricSpace& space, const PairMeasure& mu, std::size_t cap) {
  SupportIndex s = build_support(space, mu);
  std::size_t n = mu.atoms.size();
  if (n > cap)
    throw CapExceeded("lvar_exact: " + std::to_string(n) + " atoms exceed the cap of " +
                      std::to_string(cap) + "; use lvar_localsearch or lvar_candidates");
  std::vector<int> signs(n, 1), best_signs(n, 1);
  std::vector<double> scratch(s.points.size());
  double best = -1.0;
  // mask bit b drives atom b+1; counting order is lexicographic with +1 < -1,
  // so the first strict improvement keeps the lexicographically smallest
  // optimal pattern
  std::uint64_t patterns = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1;
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    for (std::size_t i = 1; i < n; ++i) signs[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
    double v = signed_value(space, mu, s, signs, scratch);
    if (v > best) {
      best = v;
      best_signs = signs;
    }
  }
  return finish_with_witness(space, mu, best_signs, true);
}

LVarResult lvar_localsearch(const FiniteMetricSpace& space, const PairMeasure& mu,
                            std::size_t restarts, std::uint64_t seed) {
  if (restarts < 1) throw ValidationError("lvar_localsearch: need at least one restart");
  SupportIndex s = build_support(space, mu);
  std::size_t n = mu.atoms.size();
  std::vector<double> scratch(s.points.size());
  double best = -1.0;
  std::vector<int> best_signs(n, 1);
  for (std::size_t r = 0; r < restarts; ++r) {
    Rng rng(Rng::derive(seed, r));
    std::vector<int> signs(n, 1);
    for (std::size_t i = 1; i < n; ++i) signs[i] = rng.next_bit() ? -1 : 1;
    double value = signed_value(space, mu, s, signs, scratch);
    for (;;) {
      double step_best = value;
      std::size_t step_flip = n;
      for (std::size_t i = 1; i < n; ++i) {
        signs[i] = -signs[i];
        double v = signed_value(space, mu, s, signs, scratch);
        signs[i] = -signs[i];
        if (v > step_best + 1e-12) {
          step_best = v;
          step_flip = i;
        }
      }
      if (step_flip == n) break;
      signs[step_flip] = -signs[step_flip];
      value = step_best;
    }
    if (value > best) {
      best = value;
      best_signs = signs;
    }
  }
  return finish_with_witness(space, mu, best_signs, false);
}

LVarResult lvar_candidates(const FiniteMetricSpace& space, const PairMeasure& mu,
                           const std::set<CandidateFamily>& families, std::uint64_t seed,
                           const CandidateOptions& options) {
  validate_pair_measure(space, mu);
  if (families.empty()) throw ValidationError("lvar_candidates: no candidate families given");
  std::size_t n = space.size();
  double best = -1.0;
  std::vector<double> best_values;

  auto consider = [&](std::vector<double> values) {
    if (n >= 2) {
      double L = lipschitz_constant(space, values).L;
      if (L > 1.0) {
        if (L > 1.0 + 1e-9) {
          for (double& v : values) v /= L;
        } else {
          for (double& v : values) v /= (1.0 + 1e-9);
        }
      }
    }
    double score = score_candidate(mu, values);
    if (score > best) {
      best = score;
      best_values = std::move(values);
    }
  };

  for (CandidateFamily family : families) {
    Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(family)));
    switch (family) {
      case CandidateFamily::distance_to_point: {
        for (std::size_t p = 0; p < n; ++p) {
          std::vector<double> values(n);
          for (std::size_t x = 0; x < n; ++x) values[x] = space.dist(x, p);
          consider(std::move(values));
        }
        break;
      }
      case CandidateFamily::distance_to_set: {
        for (std::size_t t = 0; t < options.samples_per_family; ++t) {
          std::size_t size = 1 + rng.next_index(0, std::min<std::size_t>(n, 8) - 1);
          std::vector<std::size_t> set(size);
          for (auto& p : set) p = rng.next_index(0, n - 1);
          std::vector<double> values(n);
          for (std::size_t x = 0; x < n; ++x) {
            double d = space.dist(x, set[0]);
            for (std::size_t k = 1; k < size; ++k) d = std::min(d, space.dist(x, set[k]));
            values[x] = d;
          }
          consider(std::move(values));
        }
        break;
      }
      case CandidateFamily::random_projection: {
        if (!space.coords)
          throw ValidationError("lvar_candidates: random_projection needs a Euclidean host");
        std::size_t dim = (*space.coords)[0].size();
        double inv = 1.0 / std::sqrt(static_cast<double>(dim));
        for (std::size_t t = 0; t < options.samples_per_family; ++t) {
          std::vector<double> h(dim);
          for (auto& x : h) x = rng.next_bit() ? inv : -inv;
          std::vector<double> values(n, 0.0);
          for (std::size_t x = 0; x < n; ++x)
            for (std::size_t k = 0; k < dim; ++k) values[x] += h[k] * (*space.coords)[x][k];
          consider(std::move(values));
        }
        break;
      }
      case CandidateFamily::mcshane_random: {
        for (std::size_t t = 0; t < options.samples_per_family; ++t)
          consider(random_lipschitz(space, rng).values);
        break;
      }
      case CandidateFamily::ultrametric_phi: {
        auto check = is_ultrametric(space, 0.0);
        if (!check.is_ultrametric)
          throw ValidationError("lvar_candidates: ultrametric_phi needs an exact-ultrametric host");
        double diam = space.diameter();
        FiniteMetricSpace normalized = scale_space(space, 1.0 / diam);
        double min_dist = diam;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            min_dist = std::min(min_dist, normalized.dist(i, j));
        int depth = 1;
        double t = kDefaultPhiQ;
        while (t >= min_dist && depth < 64) {
          t *= kDefaultPhiQ;
          ++depth;
        }
        BallHierarchy h = ball_hierarchy(normalized, kDefaultPhiQ, depth);
        for (std::size_t k = 0; k < options.samples_per_family; ++k) {
          PhiSample phi = sample_phi(h, rng.next_u64());
          // Psi = Phi / C(q) is 1-Lipschitz on the normalized space; undo the
          // diameter normalization so it is 1-Lipschitz on the host
          std::vector<double> values = phi.values;
          double rescale = diam * (1.0 - kDefaultPhiQ);
          for (double& v : values) v *= rescale;
          consider(std::move(values));
        }
        break;
      }
    }
  }

  LVarResult out;
  out.value = best;
  out.witness.values = std::move(best_values);
  out.witness.certified_L = 1.0;
  out.signs.assign(mu.atoms.size(), 1);
  for (std::size_t i = 0; i < mu.atoms.size(); ++i) {
    const auto& a = mu.atoms[i];
    out.signs[i] = out.witness.values[a.x] >= out.witness.values[a.y] ? 1 : -1;
  }
  if (!out.signs.empty() && out.signs[0] < 0)
    for (int& s : out.signs) s = -s;
  out.exact = false;
  return out;
}

LcjRatioResult lcj_ratio(const FiniteMetricSpace& space, const PairMeasure& mu, LVarMethod method,
                         const LcjRatioOptions& options) {
  LcjRatioResult out;
  out.variation = pair_variation(space, mu);
  switch (method) {
    case LVarMethod::exact:
      out.lvar = lvar_exact(space, mu, options.cap);
      break;
    case LVarMethod::localsearch:
      out.lvar = lvar_localsearch(space, mu, options.restarts, options.seed);
      break;
    case LVarMethod::candidates:
      out.lvar = lvar_candidates(space, mu, options.families, options.seed);
      break;
  }
  out.ratio = out.lvar.value / out.variation;
  return out;
}

double coordinate_projection_bound(const FiniteMetricSpace& space, const PairMeasure& mu) {
  validate_pair_measure(space, mu);
  if (!space.coords)
    throw ValidationError("coordinate_projection_bound: Euclidean host required");
  const auto& pts = *space.coords;
  std::size_t dim = pts[0].size();
  KahanSum s;
  for (std::size_t j = 0; j < dim; ++j)
    for (const auto& a : mu.atoms) s.add(a.weight * std::abs(pts[a.x][j] - pts[a.y][j]));
  return s.value();
}

RandomProjectionBound random_projection_bound(const FiniteMetricSpace& space, const PairMeasure& mu,
                                              std::size_t trials, std::uint64_t seed) {
  validate_pair_measure(space, mu);
  if (!space.coords)
    throw ValidationError("random_projection_bound: Euclidean host required");
  if (trials < 1) throw ValidationError("random_projection_bound: need at least one trial");
  const auto& pts = *space.coords;
  std::size_t dim = pts[0].size();
  double inv = 1.0 / std::sqrt(static_cast<double>(dim));
  Rng rng(seed);
  KahanSum sum, sumsq;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> h(dim);
    for (auto& x : h) x = rng.next_bit() ? inv : -inv;
    KahanSum draw;
    for (const auto& a : mu.atoms) {
      double dot = 0.0;
      for (std::size_t k = 0; k < dim; ++k) dot += h[k] * (pts[a.x][k] - pts[a.y][k]);
      draw.add(a.weight * std::abs(dot));
    }
    sum.add(draw.value());
    sumsq.add(draw.value() * draw.value());
  }
  RandomProjectionBound out;
  out.mean = sum.value() / static_cast<double>(trials);
  if (trials > 1) {
    double var = (sumsq.value() - static_cast<double>(trials) * out.mean * out.mean) /
                 static_cast<double>(trials - 1);
    out.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
  }
  return out;
}

}  // namespace lcj
