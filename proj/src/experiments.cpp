#include "lcjlab/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lcjlab/generators.hpp"
#include "lcjlab/instances.hpp"
#include "lcjlab/numeric.hpp"
#include "lcjlab/rng.hpp"
#include "lcjlab/ultrametric.hpp"

namespace lcj {

std::string format_cell(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string ResultTable::to_csv() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
  out << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
  return out.str();
}

std::string ResultTable::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["total_runtime_ms"] = total_runtime_ms;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj;
    for (std::size_t c = 0; c < header.size(); ++c) obj[header[c]] = row[c];
    j["rows"].push_back(std::move(obj));
  }
  return j.dump(2) + "\n";
}

namespace {

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

struct SpherePairInstance {
  FiniteMetricSpace space;
  PairMeasure mu;
};

SpherePairInstance sphere_pair_instance(int d, std::size_t n, std::uint64_t seed) {
  auto pairs = sphere_antipodal_sample(d, n, seed);
  std::vector<std::vector<double>> points;
  points.reserve(2 * n);
  for (const auto& p : pairs) {
    points.push_back(p[0]);
    points.push_back(p[1]);
  }
  SpherePairInstance inst{from_euclidean(points), {}};
  double w = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) inst.mu.atoms.push_back({2 * i, 2 * i + 1, w});
  return inst;
}

LVarResult run_method(const FiniteMetricSpace& space, const PairMeasure& mu,
                      const std::string& method, std::uint64_t seed) {
  if (method == "exact") return lvar_exact(space, mu);
  if (method == "localsearch") return lvar_localsearch(space, mu, 20, seed);
  if (method == "candidates")
    return lvar_candidates(space, mu,
                           {CandidateFamily::distance_to_point, CandidateFamily::distance_to_set,
                            CandidateFamily::mcshane_random},
                           seed);
  throw ValidationError("unknown LVar method '" + method + "'");
}

}  // namespace

ResultTable exp_sphere(const ExperimentConfig& config) {
  ResultTable t;
  t.kind = "sphere";
  t.header = {"d",    "n",     "seed", "method",          "pair_variation",
              "lvar", "ratio", "eps",  "reference_bound", "reference_formula"};
  for (int d : config.dims) {
    SpherePairInstance inst = sphere_pair_instance(d, config.pairs, config.seed);
    LVarResult res = run_method(inst.space, inst.mu, config.method, config.seed);
    double var = pair_variation(inst.space, inst.mu);
    double eps = 4.0 * std::sqrt(std::log(static_cast<double>(d)) / d);
    double reference = (12.0 * std::exp(-d * eps * eps / 8.0) + 2.0 * eps) / 2.0;
    t.rows.push_back({format_cell(d), format_cell(static_cast<double>(config.pairs)),
                      std::to_string(config.seed), config.method, format_cell(var),
                      format_cell(res.value), format_cell(res.value / var), format_cell(eps),
                      format_cell(reference),
                      "(12*exp(-d*eps^2/8)+2*eps)/2 at eps=4*sqrt(log(d)/d)"});
  }
  return t;
}

ResultTable exp_levy_probe(const ExperimentConfig& config) {
  int d = config.dims.empty() ? 400 : config.dims.front();
  if (d < 4) throw ValidationError("exp_levy_probe: dimension must be at least 4");
  double eps = config.epsilon;
  std::size_t samples = config.trials;
  ResultTable t;
  t.kind = "levy";
  t.header = {"d",     "eps",  "f_kind",        "samples",  "median_est",
              "empirical_tail", "bound", "stderr", "pass"};

  std::vector<double> h;
  if (config.f_kind == "random_projection") {
    Rng hrng(Rng::derive(config.seed, 7));
    double inv = 1.0 / std::sqrt(static_cast<double>(d));
    h.resize(d);
    for (auto& x : h) x = hrng.next_bit() ? inv : -inv;
  }
  auto evaluate = [&](Rng& rng) {
    std::vector<double> x(d);
    double norm2 = 0.0;
    for (int k = 0; k < d; ++k) {
      x[k] = rng.next_gaussian();
      norm2 += x[k] * x[k];
    }
    double inv = 1.0 / std::sqrt(norm2);
    if (config.f_kind == "coordinate") return x[0] * inv;
    if (config.f_kind == "distance_to_point") {
      double s = 0.0;
      for (int k = 0; k < d; ++k) {
        double c = x[k] * inv - (k == 0 ? 1.0 : 0.0);
        s += c * c;
      }
      return std::sqrt(s);
    }
    if (config.f_kind == "random_projection") {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += h[k] * x[k] * inv;
      return s;
    }
    throw ValidationError("exp_levy_probe: f_kind must be coordinate, distance_to_point or "
                          "random_projection");
  };

  // median from a disjoint sample
  Rng median_rng(Rng::derive(config.seed, 1));
  std::vector<double> med_values(samples);
  for (auto& v : med_values) v = evaluate(median_rng);
  std::nth_element(med_values.begin(), med_values.begin() + samples / 2, med_values.end());
  double median = med_values[samples / 2];

  Rng tail_rng(Rng::derive(config.seed, 2));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i)
    if (std::abs(evaluate(tail_rng) - median) > eps) ++hits;
  double empirical = static_cast<double>(hits) / static_cast<double>(samples);
  double bound = 6.0 * std::exp(-d * eps * eps / 8.0);
  double se = std::sqrt(empirical * (1.0 - empirical) / static_cast<double>(samples));
  bool pass = empirical <= bound + 3.0 * se;
  t.rows.push_back({format_cell(d), format_cell(eps), config.f_kind,
                    format_cell(static_cast<double>(samples)), format_cell(median),
                    format_cell(empirical), format_cell(bound), format_cell(se),
                    pass ? "pass" : "fail"});
  return t;
}

namespace {

// Shared by the tree and Laakso tables: sample random 1-Lipschitz functions,
// run the per-function certificates, report the extremes.
struct CertificateSummary {
  double min_cond42 = 0.0;
  double max_ratio_f = 0.0;   // max over f of (sum w |f(x)-f(y)|) / var
  bool chain_ok = true;
};

template <typename Instance>
CertificateSummary sample_certificates(const Instance& inst, const FiniteMetricSpace& space,
                                       double var, std::size_t samples, std::uint64_t seed,
                                       int threads) {
  std::vector<double> cond(samples), ratio(samples);
  std::vector<char> ok(samples);
  parallel_for(samples, threads, [&](std::size_t i) {
    Rng rng(Rng::derive(seed, i));
    LipschitzFunction f = random_lipschitz(space, rng);
    auto rep = condition42_check(inst, f);
    auto chain = chain_certificate(inst, f);
    cond[i] = rep.vacuous ? std::numeric_limits<double>::infinity() : rep.min_constant;
    ratio[i] = chain.lvar_f / var;
    ok[i] = chain.pass ? 1 : 0;
  });
  CertificateSummary s;
  s.min_cond42 = *std::min_element(cond.begin(), cond.end());
  s.max_ratio_f = *std::max_element(ratio.begin(), ratio.end());
  s.chain_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  return s;
}

}  // namespace

ResultTable exp_tree(const ExperimentConfig& config) {
  ResultTable t;
  t.kind = "tree";
  t.header = {"N",    "depth",  "levels", "atoms",           "var",
              "lvar_exact",     "lvar_localsearch", "lvar_candidates", "certified_lvar_bound",
              "ratio_candidates", "certified_ratio_bound", "min_cond42", "max_ratio_f",
              "chain_ok", "reference", "reference_formula"};
  for (int N : config.depths) {
    TreeInstance inst = tree_instance(N);
    double var = pair_variation(inst.host.space, inst.measure);
    double L = static_cast<double>(inst.proposition_levels);
    std::string exact_cell, local_cell;
    if (inst.measure.atoms.size() <= kDefaultExactAtomCap)
      exact_cell = format_cell(lvar_exact(inst.host.space, inst.measure).value);
    if (inst.measure.atoms.size() <= 40)
      local_cell =
          format_cell(lvar_localsearch(inst.host.space, inst.measure, 10, config.seed).value);
    LVarResult cand = lvar_candidates(
        inst.host.space, inst.measure,
        {CandidateFamily::distance_to_point, CandidateFamily::distance_to_set,
         CandidateFamily::mcshane_random},
        config.seed);
    CertificateSummary cert = sample_certificates(inst, inst.host.space, var,
                                                  config.function_samples, config.seed,
                                                  config.threads);
    double bound_lvar = std::sqrt(L);           // kappa = 1
    double bound_ratio = bound_lvar / var;      // = 2 sqrt(L) / (L - 1)
    t.rows.push_back({format_cell(N), format_cell(inst.depth), format_cell(L),
                      format_cell(static_cast<double>(inst.measure.atoms.size())),
                      format_cell(var), exact_cell, local_cell, format_cell(cand.value),
                      format_cell(bound_lvar), format_cell(cand.value / var),
                      format_cell(bound_ratio), format_cell(cert.min_cond42),
                      format_cell(cert.max_ratio_f), cert.chain_ok ? "pass" : "fail",
                      format_cell(1.0 / std::sqrt(L)), "1/sqrt(L)"});
  }
  return t;
}

ResultTable exp_laakso(const ExperimentConfig& config) {
  ResultTable t;
  t.kind = "laakso";
  t.header = {"N",    "levels", "atoms", "var",  "lvar_exact", "lvar_localsearch",
              "lvar_candidates", "certified_lvar_bound", "ratio_candidates",
              "certified_ratio_bound", "min_cond42", "max_ratio_f", "chain_ok", "sixpoint",
              "reference", "reference_formula"};
  SixPointReport six = sixpoint_inequality_check(1000000, config.seed, config.threads);
  for (int N : config.depths) {
    if (N > kMaxLaaksoInstanceDepth) continue;
    LaaksoInstance inst = laakso_instance(N);
    double var = pair_variation(inst.host.space, inst.measure);
    double L = static_cast<double>(inst.proposition_levels);
    std::string exact_cell, local_cell;
    if (inst.measure.atoms.size() <= kDefaultExactAtomCap)
      exact_cell = format_cell(lvar_exact(inst.host.space, inst.measure).value);
    if (inst.measure.atoms.size() <= 40)
      local_cell =
          format_cell(lvar_localsearch(inst.host.space, inst.measure, 10, config.seed).value);
    LVarResult cand = lvar_candidates(
        inst.host.space, inst.measure,
        {CandidateFamily::distance_to_point, CandidateFamily::distance_to_set,
         CandidateFamily::mcshane_random},
        config.seed);
    CertificateSummary cert = sample_certificates(inst, inst.host.space, var,
                                                  config.function_samples, config.seed,
                                                  config.threads);
    double kappa = 4.0;
    double bound_lvar = kappa * std::sqrt(L);
    double bound_ratio = bound_lvar / var;
    t.rows.push_back({format_cell(N), format_cell(L),
                      format_cell(static_cast<double>(inst.measure.atoms.size())),
                      format_cell(var), exact_cell, local_cell, format_cell(cand.value),
                      format_cell(bound_lvar), format_cell(cand.value / var),
                      format_cell(bound_ratio), format_cell(cert.min_cond42),
                      format_cell(cert.max_ratio_f), cert.chain_ok ? "pass" : "fail",
                      six.pass ? "pass" : "fail", format_cell(1.0 / std::sqrt(L)), "1/sqrt(L)"});
  }
  return t;
}

ResultTable exp_euclid_lower(const ExperimentConfig& config) {
  ResultTable t;
  t.kind = "euclid_lower";
  t.header = {"d",          "var",   "coordinate_bound", "random_projection_mean",
              "random_projection_stderr", "lvar_exact", "ratio_exact", "reference",
              "reference_formula"};
  for (int d : config.dims) {
    StaircasePoints stair = staircase_curve(d);
    FiniteMetricSpace space = from_euclidean(stair.points);
    PairMeasure mu;
    for (int i = 0; i < d; ++i)
      mu.atoms.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1, 1.0});
    StepCurve curve;
    curve.points.resize(d + 1);
    for (int i = 0; i <= d; ++i) curve.points[i] = i;
    double var = var_of_curve(space, curve);
    double coord = coordinate_projection_bound(space, mu);
    RandomProjectionBound rp = random_projection_bound(space, mu, 64, config.seed);
    std::string exact_cell, ratio_cell;
    if (d <= 6) {
      double v = lvar_exact(space, mu).value;
      exact_cell = format_cell(v);
      ratio_cell = format_cell(v / var);
    }
    t.rows.push_back({format_cell(d), format_cell(var), format_cell(coord),
                      format_cell(rp.mean), format_cell(rp.stderr_), exact_cell, ratio_cell,
                      format_cell(1.0 / std::sqrt(static_cast<double>(d))), "1/sqrt(d)"});
  }
  return t;
}

double tree_leaf_certificate_by_class(int depth, double q) {
  if (depth < 1) throw ValidationError("tree_leaf_certificate_by_class: bad depth");
  // leaf distance value v in {1..depth} maps to q^{depth-v}; separation scale
  // n0(v) = depth - v + 1; all pairs in the class share the expectation
  double c_star = std::numeric_limits<double>::infinity();
  double Cq = 1.0 / (1.0 - q);
  for (int v = 1; v <= depth; ++v) {
    int n0 = depth - v + 1;
    double e = phi_pair_expectation(q, n0, depth);
    double rho = std::pow(q, depth - v);
    c_star = std::min(c_star, e / (Cq * rho));
  }
  return c_star;
}

namespace {

// map sorted distinct distances, largest first, onto q^0, q^1, ...
FiniteMetricSpace rescale_to_q_powers(const FiniteMetricSpace& space, double q) {
  std::vector<double> values;
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = i + 1; j < space.size(); ++j) values.push_back(space.dist(i, j));
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<double> flat(space.size() * space.size(), 0.0);
  for (std::size_t i = 0; i < space.size(); ++i)
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (i == j) continue;
      std::size_t rank = std::lower_bound(values.begin(), values.end(), space.dist(i, j),
                                          std::greater<>()) -
                         values.begin();
      flat[i * space.size() + j] = std::pow(q, static_cast<double>(rank));
    }
  return FiniteMetricSpace(space.labels(), std::move(flat));
}

}  // namespace

ResultTable exp_ultrametric(const ExperimentConfig& config) {
  ResultTable t;
  t.kind = "ultrametric";
  t.header = {"space",  "points", "q",       "hierarchy_depth", "c_star",
              "worst_pair", "C_q", "crosscheck_ratio", "note"};
  double q = config.q;

  auto add_certificate_row = [&](const std::string& name, const FiniteMetricSpace& space,
                                 const std::string& note) {
    LcjCertificate cert = lcj_lower_certificate(space, q);
    // cross-check: exact LVar ratio on a small measure made of the worst pair
    // plus a spread of others; must dominate the certificate
    PairMeasure mu;
    mu.atoms.push_back({cert.worst_pair.first, cert.worst_pair.second, 1.0});
    Rng rng(Rng::derive(config.seed, space.size()));
    while (mu.atoms.size() < std::min<std::size_t>(6, space.size() / 2)) {
      std::size_t x = rng.next_index(0, space.size() - 1);
      std::size_t y = rng.next_index(0, space.size() - 1);
      if (x != y) mu.atoms.push_back({x, y, 1.0});
    }
    double ratio = lcj_ratio(space, mu, LVarMethod::exact).ratio;
    t.rows.push_back({name, format_cell(static_cast<double>(space.size())), format_cell(q),
                      format_cell(cert.depth), format_cell(cert.c_star),
                      space.label(cert.worst_pair.first) + "|" + space.label(cert.worst_pair.second),
                      format_cell(cert.C_q), format_cell(ratio), note});
  };

  add_certificate_row("cantor(2,6)", cantor_space(2, 6, q).space, "exact q-power metric");
  add_certificate_row("cantor(3,4)", cantor_space(3, 4, q).space, "exact q-power metric");

  for (int depth : config.leaf_depths) {
    double class_c_star = tree_leaf_certificate_by_class(depth, q);
    if (depth <= 8) {
      FiniteMetricSpace leaves = rescale_to_q_powers(tree_leaves_ultrametric(depth), q);
      LcjCertificate cert = lcj_lower_certificate(leaves, q);
      if (std::abs(cert.c_star - class_c_star) > 1e-12)
        throw PropertyError("exp_ultrametric: class certificate disagrees with the pair scan");
      t.rows.push_back({"tree_leaves(" + std::to_string(depth) + ")",
                        format_cell(static_cast<double>(leaves.size())), format_cell(q),
                        format_cell(cert.depth), format_cell(cert.c_star),
                        leaves.label(cert.worst_pair.first) + "|" +
                            leaves.label(cert.worst_pair.second),
                        format_cell(cert.C_q), "", "pair scan; matches class certificate"});
    } else {
      t.rows.push_back({"tree_leaves(" + std::to_string(depth) + ")",
                        format_cell(std::pow(2.0, depth)), format_cell(q),
                        format_cell(static_cast<double>(depth)), format_cell(class_c_star), "",
                        format_cell(1.0 / (1.0 - q)), "", "class certificate"});
    }
  }
  return t;
}

ResultTable run_experiment(const ExperimentConfig& config) {
  double start = now_ms();
  ResultTable t;
  if (config.kind == "sphere") t = exp_sphere(config);
  else if (config.kind == "levy") t = exp_levy_probe(config);
  else if (config.kind == "tree") t = exp_tree(config);
  else if (config.kind == "laakso") t = exp_laakso(config);
  else if (config.kind == "euclid_lower") t = exp_euclid_lower(config);
  else if (config.kind == "ultrametric") t = exp_ultrametric(config);
  else throw ValidationError("unknown experiment kind '" + config.kind + "'");
  t.total_runtime_ms = now_ms() - start;
  return t;
}

}  // namespace lcj
