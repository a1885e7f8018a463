#include "kmcds/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <tuple>

#include "kmcds/flow.hpp"

namespace kmcds {

int local_connectivity(const Graph& g, NodeId u, NodeId v, int cap) {
  if (u == v) throw std::invalid_argument("local_connectivity: u == v");
  if (cap < 1) throw std::invalid_argument("local_connectivity: cap must be >= 1");
  SplitFlowNetwork net(g, u, v);
  return net.max_flow(cap);
}

namespace {

std::vector<Edge> pairs_in_check_order(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::tuple<int, NodeId, NodeId>> keyed;
  keyed.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) keyed.emplace_back(g.degree(u) + g.degree(v), u, v);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Edge> pairs;
  pairs.reserve(keyed.size());
  for (auto [_, u, v] : keyed) pairs.emplace_back(u, v);
  return pairs;
}

ConnectivityFailure failure_for(const Graph& g, NodeId u, NodeId v, int k) {
  SplitFlowNetwork net(g, u, v);
  const int flow = net.max_flow(k);
  return {u, v, flow, net.min_separator()};
}

}  // namespace

std::optional<ConnectivityFailure> find_connectivity_failure(const Graph& g, int k) {
  const int n = g.node_count();
  if (n <= k) return ConnectivityFailure{};
  // A node of degree < k has a non-neighbour it cannot reach k times.
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) >= k) continue;
    for (NodeId u = 0; u < n; ++u) {
      if (u != v && !g.has_edge(u, v)) return failure_for(g, std::min(u, v), std::max(u, v), k);
    }
  }
  for (auto [u, v] : pairs_in_check_order(g)) {
    SplitFlowNetwork net(g, u, v);
    const int flow = net.max_flow(k);
    if (flow < k) return ConnectivityFailure{u, v, flow, net.min_separator()};
  }
  return std::nullopt;
}

bool is_k_connected(const Graph& g, int k) { return !find_connectivity_failure(g, k).has_value(); }

bool is_k_T_connected(const Graph& g, const NodeSet& terminals, int k) {
  const std::vector<NodeId> t = terminals.members();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (local_connectivity(g, t[i], t[j], k) < k) return false;
  return true;
}

bool is_k_in_connected_to_root(const Graph& g, NodeId root, int k) {
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (v != root && local_connectivity(g, v, root, k) < k) return false;
  return true;
}

DominationResult is_m_dominating(const Graph& g, const NodeSet& set, int m) {
  DominationResult result;
  result.counts.assign(static_cast<std::size_t>(g.node_count()), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int count = 0;
    for (NodeId w : g.adjacent(v))
      if (set.contains(w)) ++count;
    result.counts[v] = count;
    if (!set.contains(v) && count < m) result.violators.push_back(v);
  }
  result.ok = result.violators.empty();
  return result;
}

bool check_cut_characterization(const RootedGraph& g_r, const NodeSet& terminals,
                                const NodeSet& steiner, int k) {
  const NodeSet body = terminals.united(steiner).resized(g_r.graph.node_count());
  const std::vector<NodeId> nodes = body.members();
  const int size = static_cast<int>(nodes.size());
  if (size > 20) throw std::invalid_argument("check_cut_characterization: |T ∪ S| > 20");

  std::vector<int> local(static_cast<std::size_t>(g_r.graph.node_count()), -1);
  for (int i = 0; i < size; ++i) local[nodes[i]] = i;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(size), 0);
  std::uint32_t attached = 0;
  for (int i = 0; i < size; ++i) {
    for (NodeId w : g_r.graph.adjacent(nodes[i])) {
      if (w == g_r.root) attached |= 1u << i;
      else if (local[w] >= 0) adj[i] |= 1u << local[w];
    }
  }
  for (std::uint32_t a = 1; a < (1u << size); ++a) {
    std::uint32_t reach = 0;
    for (int i = 0; i < size; ++i)
      if (a >> i & 1u) reach |= adj[i];
    const int boundary = std::popcount(reach & ~a);
    const int rooted = std::popcount(a & attached);
    if (boundary + rooted < k) return false;
  }
  return true;
}

bool check_subpartition_characterization(const Graph& g, int k) {
  const int n = g.node_count();
  if (n > 12) throw std::invalid_argument("check_subpartition_characterization: |V| > 12");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w : g.adjacent(v)) adj[v] |= 1u << w;

  // Each node is outside (0), in A (1) or in B (2); enumerate in base 3.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  while (true) {
    std::uint32_t a = 0, b = 0;
    for (int i = 0; i < n; ++i) {
      if (side[i] == 1) a |= 1u << i;
      if (side[i] == 2) b |= 1u << i;
    }
    if (a && b) {
      std::uint32_t reach = 0;
      for (int i = 0; i < n; ++i)
        if (a >> i & 1u) reach |= adj[i];
      if ((reach & b) == 0 && n - std::popcount(a | b) < k) return false;
    }
    int i = 0;
    while (i < n && side[i] == 2) side[i++] = 0;
    if (i == n) break;
    ++side[i];
  }
  return true;
}

Certificate certify(const Graph& g, const NodeSet& set, int k, int m, bool with_witnesses) {
  Certificate cert;
  cert.k = k;
  cert.m = m;
  DominationResult dom = is_m_dominating(g, set, m);
  cert.dominating = dom.ok;
  cert.domination_counts = std::move(dom.counts);
  cert.undominated = std::move(dom.violators);

  const Subgraph sub = induced_subgraph(g, set);
  const int n = sub.graph.node_count();
  auto lift_failure = [&](ConnectivityFailure f) {
    if (f.u >= 0) f.u = sub.to_original[f.u];
    if (f.v >= 0) f.v = sub.to_original[f.v];
    for (NodeId& x : f.separator) x = sub.to_original[x];
    return f;
  };

  if (!with_witnesses) {
    auto failure = find_connectivity_failure(sub.graph, k);
    cert.connected = !failure;
    if (failure) cert.failure = lift_failure(*failure);
    return cert;
  }
  if (n <= k) {
    cert.connected = false;
    cert.failure = ConnectivityFailure{};
    return cert;
  }
  cert.connected = true;
  for (NodeId u = 0; u < n && cert.connected; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      SplitFlowNetwork net(sub.graph, u, v);
      const int flow = net.max_flow(k);
      if (flow < k) {
        cert.connected = false;
        cert.failure = lift_failure({u, v, flow, net.min_separator()});
        cert.witnesses.clear();
        break;
      }
      PairWitness witness{sub.to_original[u], sub.to_original[v], net.paths()};
      for (auto& path : witness.paths)
        for (NodeId& x : path) x = sub.to_original[x];
      cert.witnesses.push_back(std::move(witness));
    }
  }
  return cert;
}

bool validate_witness(const Graph& g, const NodeSet& set, const PairWitness& witness, int k) {
  if (static_cast<int>(witness.paths.size()) != k) return false;
  if (!set.contains(witness.u) || !set.contains(witness.v) || witness.u == witness.v) return false;
  NodeSet used(g.node_count());
  int direct = 0;
  for (const auto& path : witness.paths) {
    if (path.size() < 2 || path.front() != witness.u || path.back() != witness.v) return false;
    if (path.size() == 2) ++direct;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!set.contains(path[i + 1]) || !g.has_edge(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      const NodeId x = path[i];
      if (x == witness.u || x == witness.v || used.contains(x)) return false;
      used.insert(x);
    }
  }
  return direct <= 1;
}

}  // namespace kmcds
