#include "kmcds/dominating_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "kmcds/subsets.hpp"

namespace kmcds {

std::int64_t coverage_potential(const Graph& g, const NodeSet& set, int m) {
  std::int64_t total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (set.contains(v)) {
      total += m;
      continue;
    }
    int cov = 0;
    for (NodeId w : g.adjacent(v))
      if (set.contains(w)) ++cov;
    total += std::min(cov, m);
  }
  return total;
}

GreedyTrace greedy_mds_trace(const Graph& g, std::span<const Weight> weights, int m) {
  if (m < 1) throw std::invalid_argument("greedy_mds: m must be >= 1");
  const int n = g.node_count();
  GreedyTrace trace{NodeSet(n), {}, {}};
  std::vector<int> cov(static_cast<std::size_t>(n), 0);
  std::int64_t potential = 0;
  trace.potentials.push_back(potential);

  auto gain = [&](NodeId u) {
    std::int64_t g_u = m - std::min(cov[u], m);
    for (NodeId x : g.adjacent(u))
      if (!trace.set.contains(x) && cov[x] < m) ++g_u;
    return g_u;
  };

  while (true) {
    NodeId best = -1;
    std::int64_t best_gain = 0;
    for (NodeId u = 0; u < n; ++u) {
      if (trace.set.contains(u)) continue;
      const std::int64_t g_u = gain(u);
      if (g_u <= 0) continue;
      if (best < 0) {
        best = u;
        best_gain = g_u;
        continue;
      }
      const Weight w_u = weights[u];
      const Weight w_b = weights[best];
      bool better;
      if (w_u == 0 || w_b == 0) {
        better = (w_u == 0 && w_b != 0);
      } else {
        better = static_cast<__int128>(g_u) * w_b > static_cast<__int128>(best_gain) * w_u;
      }
      if (better) {
        best = u;
        best_gain = g_u;
      }
    }
    if (best < 0) break;
    trace.set.insert(best);
    trace.picks.push_back(best);
    for (NodeId x : g.adjacent(best)) ++cov[x];
    potential += best_gain;
    trace.potentials.push_back(potential);
  }
  return trace;
}

NodeSet greedy_mds(const Instance& instance) {
  const Graph& g = instance.graph;
  const int m = instance.m;
  NodeSet set = greedy_mds_trace(g, instance.weights, m).set;

  // Reverse delete, heaviest first. Removal only lowers counts, so a node
  // kept once stays needed and one pass leaves no redundant node.
  std::vector<NodeId> order = set.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return instance.weights[a] > instance.weights[b]; });
  std::vector<int> count(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId v = 0; v < g.node_count(); ++v)
    for (NodeId w : g.adjacent(v))
      if (set.contains(w)) ++count[v];
  for (NodeId v : order) {
    if (count[v] < m) continue;
    bool needed = false;
    for (NodeId w : g.adjacent(v))
      if (!set.contains(w) && count[w] <= m) needed = true;
    if (needed) continue;
    set.erase(v);
    for (NodeId w : g.adjacent(v)) --count[w];
  }
  return set;
}

NodeSet opt_mds_bruteforce(const Instance& instance) {
  const Graph& g = instance.graph;
  const int n = g.node_count();
  if (n > 16) throw std::invalid_argument("opt_mds_bruteforce: n > 16");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w : g.adjacent(v)) adj[v] |= 1u << w;
  std::vector<NodeId> positions(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) positions[v] = v;

  for (std::uint32_t mask : subsets_by_weight(instance.weights)) {
    bool ok = true;
    for (NodeId v = 0; v < n && ok; ++v)
      if (!(mask >> v & 1u) && std::popcount(adj[v] & mask) < instance.m) ok = false;
    if (ok) return mask_to_set(mask, positions, n);
  }
  // Unreachable: V itself is m-dominating.
  return NodeSet::full(n);
}

double multicover_bound(int max_degree, int m) {
  return std::log(static_cast<double>(max_degree + m)) + 1.0;
}

bool within_multicover_bound(Weight alg, Weight opt, int max_degree, int m) {
  if (alg <= opt) return true;  // Δ + m >= 1, so the bound is at least 1
  const long double ln = std::log(static_cast<long double>(max_degree + m));
  // logl is accurate to a few ulps; shrink the bracket well past that.
  const long double ln_low = ln * (1.0L - 1e-15L) - 1e-15L;
  return static_cast<long double>(alg) <= static_cast<long double>(opt) * (ln_low + 1.0L);
}

}  // namespace kmcds
