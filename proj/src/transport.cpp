#include "lcjlab/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lcjlab/numeric.hpp"

namespace lcj {

namespace {

constexpr double kZeroCharge = 1e-15;
constexpr double kGapTol = 1e-9;

struct SparseProblem {
  std::vector<std::size_t> sources, sinks;       // point indices
  std::vector<double> supply, demand;            // positive amounts
};

SparseProblem split_charges(const std::vector<std::size_t>& points, const std::vector<double>& charges,
                            double scale) {
  SparseProblem prob;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (charges[i] > scale * kZeroCharge) {
      prob.sources.push_back(points[i]);
      prob.supply.push_back(charges[i]);
    } else if (charges[i] < -scale * kZeroCharge) {
      prob.sinks.push_back(points[i]);
      prob.demand.push_back(-charges[i]);
    }
  }
  return prob;
}

// Successive shortest paths with potentials; returns the flow matrix
// (row = source position, col = sink position) and total cost.
std::vector<double> solve_transport(const FiniteMetricSpace& space, const SparseProblem& prob,
                                    double* cost_out) {
  std::size_t ns = prob.sources.size(), nt = prob.sinks.size();
  std::vector<double> flow(ns * nt, 0.0);
  if (ns == 0 || nt == 0) {
    if (cost_out) *cost_out = 0.0;
    return flow;
  }
  std::vector<double> remaining_supply = prob.supply;
  std::vector<double> remaining_demand = prob.demand;
  double total = 0.0;
  for (double s : remaining_supply) total += s;
  double zero = kZeroCharge * std::max(1.0, total);
  // nodes: [0, ns) sources, [ns, ns+nt) sinks, ns+nt the super-sink
  std::size_t m = ns + nt + 1;
  std::size_t super = ns + nt;
  std::vector<double> pot(m, 0.0);
  auto cost = [&](std::size_t s, std::size_t t) {
    return space.dist(prob.sources[s], prob.sinks[t]);
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  double shipped = 0.0;
  std::size_t max_rounds = 4 * ns * nt + 16;
  std::vector<double> dist(m);
  std::vector<std::size_t> parent(m);
  std::vector<bool> done(m);
  for (std::size_t round = 0; round < max_rounds; ++round) {
    if (shipped >= total - zero) break;
    // Dijkstra over reduced costs; active sources are the (implicit)
    // zero-potential super-source frontier.
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), m);
    std::fill(done.begin(), done.end(), false);
    for (std::size_t s = 0; s < ns; ++s)
      if (remaining_supply[s] > zero) dist[s] = 0.0;
    for (;;) {
      std::size_t u = m;
      double best = kInf;
      for (std::size_t v = 0; v < m; ++v)
        if (!done[v] && dist[v] < best) {
          best = dist[v];
          u = v;
        }
      if (u == m || u == super) break;
      done[u] = true;
      if (u < ns) {
        for (std::size_t t = 0; t < nt; ++t) {
          double rc = cost(u, t) + pot[u] - pot[ns + t];
          if (rc < 0.0) rc = 0.0;  // clamp float fuzz
          if (dist[u] + rc < dist[ns + t]) {
            dist[ns + t] = dist[u] + rc;
            parent[ns + t] = u;
          }
        }
      } else {
        std::size_t t = u - ns;
        if (remaining_demand[t] > zero) {
          double rc = pot[u] - pot[super];
          if (rc < 0.0) rc = 0.0;
          if (dist[u] + rc < dist[super]) {
            dist[super] = dist[u] + rc;
            parent[super] = u;
          }
        }
        for (std::size_t s = 0; s < ns; ++s) {
          if (flow[s * nt + t] <= 0.0) continue;
          double rc = -cost(s, t) + pot[ns + t] - pot[s];
          if (rc < 0.0) rc = 0.0;
          if (dist[u] + rc < dist[s]) {
            dist[s] = dist[u] + rc;
            parent[s] = u;
          }
        }
      }
    }
    if (dist[super] == kInf) break;
    std::size_t best_t = parent[super] - ns;
    // bottleneck along the parent path
    double bottleneck = remaining_demand[best_t];
    for (std::size_t v = ns + best_t; parent[v] != m;) {
      std::size_t u = parent[v];
      if (v < ns) bottleneck = std::min(bottleneck, flow[v * nt + (u - ns)]);  // backward arc
      v = u;
      if (v < ns && parent[v] == m) bottleneck = std::min(bottleneck, remaining_supply[v]);
    }
    if (!(bottleneck > 0.0)) break;
    // apply the augmentation
    std::size_t v = ns + best_t;
    while (parent[v] != m) {
      std::size_t u = parent[v];
      if (v >= ns)
        flow[u * nt + (v - ns)] += bottleneck;
      else
        flow[v * nt + (u - ns)] -= bottleneck;
      v = u;
    }
    remaining_supply[v] -= bottleneck;
    remaining_demand[best_t] -= bottleneck;
    shipped += bottleneck;
    double reached_cap = dist[super];
    for (std::size_t w = 0; w < m; ++w) pot[w] += std::min(dist[w], reached_cap);
  }
  if (shipped < total - 1e-9 * std::max(1.0, total))
    throw PropertyError("transport: solver failed to ship the full mass");
  KahanSum c;
  for (std::size_t s = 0; s < ns; ++s)
    for (std::size_t t = 0; t < nt; ++t)
      if (flow[s * nt + t] > 0.0) c.add(flow[s * nt + t] * cost(s, t));
  if (cost_out) *cost_out = c.value();
  return flow;
}

// Feasible dual potentials from an optimal plan: Bellman-Ford over the
// difference constraints  f(p) - f(q) <= dist(p,q)  for all support pairs and
// f(s) - f(t) = dist(s,t) on flow-carrying arcs.
std::vector<double> dual_from_plan(const FiniteMetricSpace& space, const SparseProblem& prob,
                                   const std::vector<double>& flow,
                                   const std::vector<std::size_t>& support) {
  struct Arc {
    std::size_t from, to;
    double w;
  };
  std::size_t n = support.size();
  std::vector<Arc> arcs;
  arcs.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) arcs.push_back({b, a, space.dist(support[a], support[b])});
  std::vector<std::size_t> pos_of(space.size(), n);
  for (std::size_t a = 0; a < n; ++a) pos_of[support[a]] = a;
  std::size_t nt = prob.sinks.size();
  for (std::size_t s = 0; s < prob.sources.size(); ++s)
    for (std::size_t t = 0; t < nt; ++t)
      if (flow[s * nt + t] > 0.0)
        arcs.push_back({pos_of[prob.sources[s]], pos_of[prob.sinks[t]],
                        -space.dist(prob.sources[s], prob.sinks[t])});
  std::vector<double> f(n, 0.0);  // virtual source already relaxed into the zeros
  for (std::size_t round = 0; round + 1 < n + 1; ++round) {
    bool changed = false;
    for (const auto& a : arcs)
      if (f[a.from] + a.w < f[a.to] - 1e-15) {
        f[a.to] = f[a.from] + a.w;
        changed = true;
      }
    if (!changed) break;
  }
  for (const auto& a : arcs)
    if (f[a.from] + a.w < f[a.to] - 1e-7)
      throw PropertyError("transport: dual reconstruction found a negative cycle; plan not optimal");
  return f;
}

}  // namespace

double transport_value_sparse(const FiniteMetricSpace& space, const std::vector<std::size_t>& points,
                              const std::vector<double>& charges) {
  double scale = 1.0;
  for (double c : charges) scale = std::max(scale, std::abs(c));
  SparseProblem prob = split_charges(points, charges, scale);
  double cost = 0.0;
  solve_transport(space, prob, &cost);
  return cost;
}

KantorovichResult kantorovich_value(const FiniteMetricSpace& space, const SignedMeasure& c) {
  if (c.charge.size() != space.size())
    throw ValidationError("kantorovich_value: one charge per point required");
  KahanSum balance;
  double scale = 1.0;
  for (double x : c.charge) {
    balance.add(x);
    scale = std::max(scale, std::abs(x));
  }
  if (std::abs(balance.value()) > 1e-12 * scale)
    throw ValidationError("kantorovich_value: charges do not balance to zero");

  std::vector<std::size_t> points(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) points[i] = i;
  SparseProblem prob = split_charges(points, c.charge, scale);

  KantorovichResult out;
  if (prob.sources.empty() || prob.sinks.empty()) {
    out.value = 0.0;
    out.potentials.values.assign(space.size(), 0.0);
    out.potentials.certified_L = 1.0;
    return out;
  }

  double cost = 0.0;
  std::vector<double> flow = solve_transport(space, prob, &cost);
  out.value = cost;
  std::size_t nt = prob.sinks.size();
  for (std::size_t s = 0; s < prob.sources.size(); ++s)
    for (std::size_t t = 0; t < nt; ++t)
      if (flow[s * nt + t] > 0.0)
        out.plan.flows.push_back({prob.sources[s], prob.sinks[t], flow[s * nt + t]});
  out.plan.cost = cost;

  std::vector<std::size_t> support = prob.sources;
  support.insert(support.end(), prob.sinks.begin(), prob.sinks.end());
  std::vector<double> f_support = dual_from_plan(space, prob, flow, support);

  // McShane extension to every point; equals f_support on the support since
  // the difference constraints already include all support pairs.
  out.potentials = mcshane_extend(space, support, f_support, 1.0);

  KahanSum dual;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (c.charge[i] != 0.0) dual.add(c.charge[i] * out.potentials.values[i]);
  if (std::abs(dual.value() - cost) > kGapTol * std::max(1.0, std::abs(cost)))
    throw PropertyError("kantorovich_value: duality gap " +
                        std::to_string(std::abs(dual.value() - cost)));
  return out;
}

}  // namespace lcj
