#include "lcjlab/instances.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcjlab/numeric.hpp"
#include "lcjlab/rng.hpp"

namespace lcj {

namespace {

// vertex on the path from the root to leaf `j` at distance `pos` from the root
std::size_t path_vertex(int depth, std::size_t j, int pos) {
  return TreeSpec::id(pos, j >> (depth - pos));
}

}  // namespace

TreeInstance tree_instance(int exponent) {
  if (exponent < 1 || exponent > kMaxTreeInstanceExponent)
    throw CapExceeded("tree_instance: exponent must lie in [1, " +
                      std::to_string(kMaxTreeInstanceExponent) + "]");
  TreeInstance inst;
  inst.exponent = exponent;
  inst.depth = 1 << exponent;  // D
  inst.host = dyadic_tree(inst.depth);
  inst.proposition_levels = exponent + 1;
  int D = inst.depth;
  int N = exponent;
  std::size_t leaves = std::size_t{1} << D;
  inst.pairing_constant = Rational(1) / (Rational::pow2(D) * Rational::pow2(N));

  // filtration levels k = 0..N; atom (k, j, l) at linear index j * 2^k + l
  inst.filtration.levels.resize(N + 1);
  inst.atom_vertices.resize(N + 1);
  for (int k = 0; k <= N; ++k) {
    std::size_t slabs = std::size_t{1} << k;
    Rational prob = Rational(1) / (Rational::pow2(D) * Rational::pow2(k));
    int seg = D >> k;  // path positions per slab
    inst.filtration.levels[k].resize(leaves * slabs);
    inst.atom_vertices[k].resize(leaves * slabs);
    for (std::size_t j = 0; j < leaves; ++j)
      for (std::size_t l = 0; l < slabs; ++l) {
        std::size_t idx = j * slabs + l;
        std::size_t parent = k == 0 ? kNoParent : j * (slabs / 2) + l / 2;
        inst.filtration.levels[k][idx] = {prob, parent};
        auto& av = inst.atom_vertices[k][idx];
        av.v = path_vertex(D, j, static_cast<int>(l) * seg);
        av.vprime = path_vertex(D, j, static_cast<int>(l + 1) * seg);
        av.mid = k < N ? path_vertex(D, j, static_cast<int>(l) * seg + seg / 2) : kNoParent;
      }
  }
  inst.filtration.validate();

  // paired groups: level k in 0..N-1, one group per mid-vertex U
  for (int k = 0; k < N; ++k) {
    int seg = D >> k;
    int h = seg / 2;
    std::size_t slabs = std::size_t{1} << k;
    for (std::size_t l = 0; l < slabs; ++l) {
      int m = static_cast<int>(l) * seg + h;  // position of U
      int b = static_cast<int>(l + 1) * seg;  // position of the v'
      std::size_t mids = std::size_t{1} << m;
      for (std::size_t pos = 0; pos < mids; ++pos) {
        TreeGroup g;
        g.level = k;
        g.mid = TreeSpec::id(m, pos);
        g.anchor = TreeSpec::id(m - h, pos >> h);
        // descendants of U's children at position b
        std::size_t left_child = 2 * pos, right_child = 2 * pos + 1;
        int below = b - m - 1;  // levels below the children
        std::size_t fan = std::size_t{1} << below;
        for (std::size_t t = 0; t < fan; ++t) {
          g.left.push_back(TreeSpec::id(b, left_child * fan + t));
          g.right.push_back(TreeSpec::id(b, right_child * fan + t));
        }
        g.atoms_per_vertex = Rational::pow2(D - b);
        Rational pairs_through_u = Rational::pow2(D - m - 1);
        g.combo_weight = inst.pairing_constant * g.atoms_per_vertex * g.atoms_per_vertex /
                         pairs_through_u;
        g.rho = Rational::pow2(N - k);
        inst.groups.push_back(std::move(g));
      }
    }
  }

  Rational mass(0);
  for (const auto& g : inst.groups) {
    for (std::size_t a = 0; a < g.left.size(); ++a)
      for (std::size_t b2 = 0; b2 < g.right.size(); ++b2)
        inst.measure.atoms.push_back({g.left[a], g.right[b2], g.combo_weight.to_double()});
    mass += g.combo_weight * g.rho * Rational(static_cast<std::int64_t>(g.left.size() *
                                                                        g.right.size()));
  }
  inst.mass = mass;
  return inst;
}

MartingaleSeq tree_martingale(const TreeInstance& instance, const LipschitzFunction& f) {
  if (f.values.size() != instance.host.space.size())
    throw ValidationError("tree_martingale: f must be defined on all tree vertices");
  MartingaleSeq m;
  int N = instance.exponent;
  m.values.resize(N + 1);
  for (int k = 0; k <= N; ++k) {
    double scale = std::ldexp(1.0, k - N);  // 2^{k-N}, exact
    const auto& verts = instance.atom_vertices[k];
    m.values[k].resize(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a)
      m.values[k][a] = scale * (f.values[verts[a].v] - f.values[verts[a].vprime]);
  }
  return m;
}

LaaksoInstance laakso_instance(int depth) {
  if (depth < 1 || depth > kMaxLaaksoInstanceDepth)
    throw CapExceeded("laakso_instance: depth must lie in [1, " +
                      std::to_string(kMaxLaaksoInstanceDepth) + "]");
  LaaksoInstance inst;
  inst.depth = depth;
  inst.host = laakso_stage(depth);
  inst.proposition_levels = depth + 1;
  const LaaksoGraph& g = inst.host.graph;
  Rational mass(0);
  for (int k = 0; k < depth; ++k) {
    for (std::size_t e = 0; e < g.levels[k].size(); ++e) {
      LaaksoGroup grp;
      grp.level = k;
      grp.a = g.levels[k][e].u;
      grp.d = g.levels[k][e].v;
      grp.b = g.splits[k][e].b;
      grp.p = g.splits[k][e].p;
      grp.q = g.splits[k][e].q;
      grp.c = g.splits[k][e].c;
      grp.traverse = g.traverse_probability(k, e);
      grp.rho = Rational::pow2(-2 * k - 1);  // 2 * 4^{-k-1}
      mass += grp.traverse * grp.rho;
      inst.measure.atoms.push_back({grp.p, grp.q, grp.traverse.to_double()});
      inst.groups.push_back(std::move(grp));
    }
  }
  inst.mass = mass;
  return inst;
}

namespace {

void require_certified(const LipschitzFunction& f) {
  if (f.certified_L > 1.0 + 1e-12)
    throw ValidationError("certificate check: f is not certified 1-Lipschitz");
}

constexpr double kSkipDenominator = 1e-14;

// E|dM_{k+1}| restricted to the atoms through one tree group, divided by the
// pairing constant: A * sum over v' of |f(v) + f(v') - 2 f(U)|.
double tree_group_increment(const TreeGroup& g, const TreeInstance& inst,
                            const std::vector<double>& f) {
  KahanSum s;
  for (std::size_t v : g.left) s.add(std::abs(f[g.anchor] + f[v] - 2.0 * f[g.mid]));
  for (std::size_t v : g.right) s.add(std::abs(f[g.anchor] + f[v] - 2.0 * f[g.mid]));
  return inst.pairing_constant.to_double() * g.atoms_per_vertex.to_double() * s.value();
}

double tree_group_oscillation(const TreeGroup& g, const std::vector<double>& f) {
  KahanSum s;
  for (std::size_t a : g.left)
    for (std::size_t b : g.right) s.add(std::abs(f[a] - f[b]));
  return g.combo_weight.to_double() * s.value();
}

double laakso_four_terms(const std::vector<double>& f, const LaaksoGroup& g, std::size_t mid) {
  double across = f[g.d] - f[g.a];
  return std::abs(4.0 * f[g.b] - 3.0 * f[g.a] - f[g.d]) +
         std::abs(4.0 * f[mid] - 4.0 * f[g.b] - across) +
         std::abs(4.0 * f[g.c] - 4.0 * f[mid] - across) +
         std::abs(3.0 * f[g.d] + f[g.a] - 4.0 * f[g.c]);
}

double laakso_group_increment(const LaaksoGroup& g, const std::vector<double>& f) {
  return g.traverse.to_double() / 8.0 * (laakso_four_terms(f, g, g.p) + laakso_four_terms(f, g, g.q));
}

}  // namespace

Condition42Report condition42_check(const TreeInstance& instance, const LipschitzFunction& f) {
  require_certified(f);
  Condition42Report rep;
  rep.min_constant = std::numeric_limits<double>::infinity();
  for (const auto& g : instance.groups) {
    double denom = tree_group_oscillation(g, f.values);
    if (denom <= kSkipDenominator) continue;
    double num = tree_group_increment(g, instance, f.values);
    rep.min_constant = std::min(rep.min_constant, num / denom);
    ++rep.groups_checked;
  }
  rep.vacuous = rep.groups_checked == 0;
  if (rep.vacuous) rep.min_constant = 0.0;
  return rep;
}

Condition42Report condition42_check(const LaaksoInstance& instance, const LipschitzFunction& f) {
  require_certified(f);
  Condition42Report rep;
  rep.min_constant = std::numeric_limits<double>::infinity();
  for (const auto& g : instance.groups) {
    double denom = g.traverse.to_double() * std::abs(f.values[g.p] - f.values[g.q]);
    if (denom <= kSkipDenominator) continue;
    double num = laakso_group_increment(g, f.values);
    rep.min_constant = std::min(rep.min_constant, num / denom);
    ++rep.groups_checked;
  }
  rep.vacuous = rep.groups_checked == 0;
  if (rep.vacuous) rep.min_constant = 0.0;
  return rep;
}

ChainCertificate chain_certificate(const TreeInstance& instance, const LipschitzFunction& f,
                                   double tol) {
  require_certified(f);
  ChainCertificate cert;
  cert.kappa = 1.0;
  cert.levels = instance.proposition_levels;
  KahanSum lvar, edm;
  for (const auto& g : instance.groups) {
    lvar.add(tree_group_oscillation(g, f.values));
    edm.add(tree_group_increment(g, instance, f.values));
  }
  cert.lvar_f = lvar.value();
  cert.sum_edm = edm.value();
  MartingaleSeq m = tree_martingale(instance, f);
  for (const auto& level : m.values)
    for (double v : level) cert.max_abs_m = std::max(cert.max_abs_m, std::abs(v));
  cert.pass = cert.lvar_f <= cert.kappa * cert.sum_edm + tol &&
              cert.sum_edm <= std::sqrt(static_cast<double>(cert.levels)) * cert.max_abs_m + tol;
  return cert;
}

ChainCertificate chain_certificate(const LaaksoInstance& instance, const LipschitzFunction& f,
                                   double tol) {
  require_certified(f);
  ChainCertificate cert;
  cert.kappa = 4.0;
  cert.levels = instance.proposition_levels;
  KahanSum lvar, edm;
  for (const auto& g : instance.groups) {
    lvar.add(g.traverse.to_double() * std::abs(f.values[g.p] - f.values[g.q]));
    edm.add(laakso_group_increment(g, f.values));
  }
  cert.lvar_f = lvar.value();
  cert.sum_edm = edm.value();
  const LaaksoGraph& g = instance.host.graph;
  for (int k = 0; k <= instance.depth; ++k) {
    double scale = std::ldexp(1.0, 2 * k);  // 4^k
    for (const auto& e : g.levels[k])
      cert.max_abs_m = std::max(cert.max_abs_m, scale * std::abs(f.values[e.v] - f.values[e.u]));
  }
  cert.pass = cert.lvar_f <= cert.kappa * cert.sum_edm + tol &&
              cert.sum_edm <= std::sqrt(static_cast<double>(cert.levels)) * cert.max_abs_m + tol;
  return cert;
}

double sixpoint_lhs(double a, double b, double c, double d, double p, double q) {
  double across = d - a;
  return 2.0 * std::abs(d + 3.0 * a - 4.0 * b) + 2.0 * std::abs(a + 3.0 * d - 4.0 * c) +
         std::abs(across + 4.0 * b - 4.0 * p) + std::abs(across - 4.0 * c + 4.0 * p) +
         std::abs(across + 4.0 * b - 4.0 * q) + std::abs(across - 4.0 * c + 4.0 * q);
}

SixPointReport sixpoint_inequality_check(std::size_t samples, std::uint64_t seed, int threads) {
  if (samples < 1) throw ValidationError("sixpoint_inequality_check: need at least one sample");
  constexpr std::size_t kChunk = 4096;
  std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<double> chunk_min(chunks, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> chunk_count(chunks, 0);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    Rng rng(Rng::derive(seed, chunk));
    std::size_t count = std::min(kChunk, samples - chunk * kChunk);
    double local_min = std::numeric_limits<double>::infinity();
    std::size_t evaluated = 0;
    for (std::size_t i = 0; i < count; ++i) {
      double a = rng.next_uniform(-1.0, 1.0);
      double b = rng.next_uniform(-1.0, 1.0);
      double c = rng.next_uniform(-1.0, 1.0);
      double d = rng.next_uniform(-1.0, 1.0);
      double p = rng.next_uniform(-1.0, 1.0);
      double q = rng.next_uniform(-1.0, 1.0);
      double denom = std::abs(p - q);
      if (denom <= 1e-12) continue;
      local_min = std::min(local_min, sixpoint_lhs(a, b, c, d, p, q) / denom);
      ++evaluated;
    }
    chunk_min[chunk] = local_min;
    chunk_count[chunk] = evaluated;
  });
  SixPointReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
    rep.min_ratio = std::min(rep.min_ratio, chunk_min[chunk]);
    rep.evaluated += chunk_count[chunk];
  }
  rep.pass = rep.evaluated > 0 && rep.min_ratio >= 1.0 - 1e-12;
  return rep;
}

}  // namespace lcj
