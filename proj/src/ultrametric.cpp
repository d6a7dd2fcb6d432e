#include "lcjlab/ultrametric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcjlab/rng.hpp"

namespace lcj {

int BallHierarchy::separation_scale(std::size_t x, std::size_t y) const {
  for (int n = 1; n <= depth; ++n)
    if (block_of[n - 1][x] != block_of[n - 1][y]) return n;
  return 0;
}

BallHierarchy ball_hierarchy(const FiniteMetricSpace& space, double q, int depth) {
  if (!(q > 0.0 && q < 1.0)) throw ValidationError("ball_hierarchy: q must lie in (0, 1)");
  if (depth < 1) throw ValidationError("ball_hierarchy: depth must be at least 1");
  auto check = is_ultrametric(space, 0.0);
  if (!check.is_ultrametric)
    throw ValidationError("ball_hierarchy: space is not an exact ultrametric");
  std::size_t n = space.size();
  BallHierarchy h;
  h.q = q;
  h.depth = depth;
  h.points = n;
  double threshold = 1.0;
  std::vector<std::size_t> prev_block(n, 0);
  for (int scale = 1; scale <= depth; ++scale) {
    threshold *= q;
    // equivalence classes of dist <= q^scale; the relation is transitive on
    // an ultrametric, assign greedily by scanning lexicographically
    std::vector<std::size_t> block(n, SIZE_MAX);
    std::vector<std::size_t> centers;
    for (std::size_t i = 0; i < n; ++i) {
      if (block[i] != SIZE_MAX) continue;
      std::size_t id = centers.size();
      centers.push_back(i);
      block[i] = id;
      for (std::size_t j = i + 1; j < n; ++j)
        if (block[j] == SIZE_MAX && space.dist(i, j) <= threshold) block[j] = id;
    }
    // separation and refinement
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (block[i] != block[j] && space.dist(i, j) <= threshold)
          throw PropertyError("ball_hierarchy: blocks at scale " + std::to_string(scale) +
                              " are not separated");
        if (block[i] == block[j] && prev_block[i] != prev_block[j])
          throw PropertyError("ball_hierarchy: blocks do not refine at scale " +
                              std::to_string(scale));
      }
    h.block_base.push_back(h.total_blocks);
    h.total_blocks += centers.size();
    h.block_of.push_back(std::move(block));
    h.centers.push_back(std::move(centers));
    prev_block = h.block_of.back();
  }
  return h;
}

PhiSample sample_phi(const BallHierarchy& hierarchy, std::uint64_t seed) {
  PhiSample s;
  s.seed = seed;
  s.q = hierarchy.q;
  s.eps.resize(hierarchy.total_blocks);
  Rng rng(seed);
  for (std::size_t b = 0; b < hierarchy.total_blocks; ++b) s.eps[b] = rng.next_bit() ? 1 : 0;
  s.values.assign(hierarchy.points, 0.0);
  double qn = 1.0;
  for (int scale = 1; scale <= hierarchy.depth; ++scale) {
    qn *= hierarchy.q;
    const auto& blocks = hierarchy.block_of[scale - 1];
    std::size_t base = hierarchy.block_base[scale - 1];
    for (std::size_t x = 0; x < hierarchy.points; ++x)
      if (s.eps[base + blocks[x]]) s.values[x] += qn;
  }
  return s;
}

double phi_pair_expectation(double q, int n0, int depth) {
  if (n0 < 1 || n0 > depth) throw ValidationError("phi_pair_expectation: bad scale range");
  int m = depth - n0 + 1;
  if (m > kPhiEnumerationCap)
    throw CapExceeded("phi_pair_expectation: " + std::to_string(m) +
                      " levels exceed the enumeration cap of " + std::to_string(kPhiEnumerationCap) +
                      "; use the analytic bound q^n0 (1/2 - q/(1-q)) instead");
  std::vector<double> scales(m);
  scales[0] = std::pow(q, n0);
  for (int k = 1; k < m; ++k) scales[k] = scales[k - 1] * q;

  // delta_n = xi_n - eta_n over independent fair bits: values {-1, 0, +1}
  // with multiplicities {1, 2, 1} out of 4
  struct Term {
    double v;
    std::int64_t c;
  };
  auto enumerate = [&](int from, int to) {
    std::vector<Term> list{{0.0, 1}};
    for (int k = from; k < to; ++k) {
      std::vector<Term> next;
      next.reserve(list.size() * 3);
      for (const auto& t : list) {
        next.push_back({t.v - scales[k], t.c});
        next.push_back({t.v, 2 * t.c});
        next.push_back({t.v + scales[k], t.c});
      }
      list = std::move(next);
    }
    return list;
  };
  int mid = m / 2;
  std::vector<Term> a = enumerate(0, mid);
  std::vector<Term> b = enumerate(mid, m);
  std::sort(b.begin(), b.end(), [](const Term& x, const Term& y) { return x.v < y.v; });
  std::size_t nb = b.size();
  std::vector<long double> prefix_c(nb + 1, 0.0L), prefix_cv(nb + 1, 0.0L);
  for (std::size_t i = 0; i < nb; ++i) {
    prefix_c[i + 1] = prefix_c[i] + static_cast<long double>(b[i].c);
    prefix_cv[i + 1] = prefix_cv[i] + static_cast<long double>(b[i].c) * b[i].v;
  }
  long double acc = 0.0L;
  for (const auto& ta : a) {
    // split b at v >= -ta.v
    std::size_t lo = std::lower_bound(b.begin(), b.end(), -ta.v,
                                      [](const Term& t, double key) { return t.v < key; }) -
                     b.begin();
    long double pos = (prefix_cv[nb] - prefix_cv[lo]) + ta.v * (prefix_c[nb] - prefix_c[lo]);
    long double neg = -(prefix_cv[lo] + ta.v * prefix_c[lo]);
    acc += static_cast<long double>(ta.c) * (pos + neg);
  }
  long double denom = std::pow(4.0L, m);
  return static_cast<double>(acc / denom);
}

double phi_expectation_exact(const BallHierarchy& hierarchy, std::size_t x, std::size_t y) {
  if (x == y) throw ValidationError("phi_expectation_exact: x and y must differ");
  int n0 = hierarchy.separation_scale(x, y);
  if (n0 == 0)
    throw ValidationError("phi_expectation_exact: pair never separated; increase the hierarchy depth");
  return phi_pair_expectation(hierarchy.q, n0, hierarchy.depth);
}

LcjCertificate lcj_lower_certificate(const FiniteMetricSpace& space, double q, int depth) {
  if (space.size() < 2) throw ValidationError("lcj_lower_certificate: need at least two points");
  double diam = space.diameter();
  FiniteMetricSpace normalized = scale_space(space, 1.0 / diam);
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < normalized.size(); ++i)
    for (std::size_t j = i + 1; j < normalized.size(); ++j)
      min_dist = std::min(min_dist, normalized.dist(i, j));
  if (depth <= 0) {
    depth = 1;
    double t = q;
    while (t >= min_dist && depth < 64) {
      t *= q;
      ++depth;
    }
  }
  BallHierarchy h = ball_hierarchy(normalized, q, depth);
  LcjCertificate cert;
  cert.C_q = 1.0 / (1.0 - q);
  cert.C_loose = 2.0 / (1.0 - q);
  cert.depth = depth;
  cert.diameter = diam;
  cert.c_star = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < normalized.size(); ++i)
    for (std::size_t j = i + 1; j < normalized.size(); ++j) {
      double e = phi_expectation_exact(h, i, j);
      double ratio = e / (cert.C_q * normalized.dist(i, j));
      if (ratio < cert.c_star) {
        cert.c_star = ratio;
        cert.worst_pair = {i, j};
      }
    }
  return cert;
}

}  // namespace lcj
