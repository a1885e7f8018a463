#include "kmcds/pair_augment.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/flow.hpp"

namespace kmcds {

bool is_forest(int node_count, std::span<const Edge> edges) {
  std::vector<int> parent(static_cast<std::size_t>(node_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : edges) {
    const int a = find(u), b = find(v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

AugmentingForest minimal_augmenting_forest(const Graph& h, const NodeSet& attachment, int k) {
  const std::vector<NodeId> r = attachment.members();
  std::vector<Edge> forest;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (!h.has_edge(r[i], r[j])) forest.emplace_back(r[i], r[j]);

  if (!is_k_connected(h.with_edges(forest), k))
    throw std::logic_error("minimal_augmenting_forest: H plus the clique on R is not k-connected");

  // Needed edges stay needed as J shrinks, so one pass is inclusion-minimal.
  const std::vector<Edge> candidates = forest;
  for (const Edge& e : candidates) {
    std::vector<Edge> trial;
    for (const Edge& f : forest)
      if (f != e) trial.push_back(f);
    if (is_k_connected(h.with_edges(trial), k)) forest = std::move(trial);
  }

  // A forest on R has at most |R| - 1 edges, which is k - 1 when |R| = k.
  if (!is_forest(h.node_count(), forest) || static_cast<int>(forest.size()) > std::max<int>(attachment.size() - 1, 0)) {
    throw std::logic_error("minimal_augmenting_forest: result has " + std::to_string(forest.size()) +
                           " edges or a cycle");
  }
  return AugmentingForest{std::move(forest)};
}

PairPaths min_weight_k_paths(const Graph& g, std::span<const Weight> weights, const NodeSet& free,
                             NodeId u, NodeId v, int k) {
  if (!free.contains(u) || !free.contains(v))
    throw std::invalid_argument("min_weight_k_paths: endpoints must be free");
  const int n = g.node_count();
  const SplitFlowNetwork::Cost scale = n + 1;
  std::vector<SplitFlowNetwork::Cost> cost(static_cast<std::size_t>(n), 0);
  for (NodeId x = 0; x < n; ++x)
    if (!free.contains(x)) cost[x] = weights[x] * scale + 1;

  SplitFlowNetwork net(g, u, v, cost);
  const int flow = net.min_cost_flow(k);
  if (flow < k) {
    throw InfeasibleError("min_weight_k_paths: only " + std::to_string(flow) + " disjoint paths between " +
                          std::to_string(u) + " and " + std::to_string(v));
  }
  PairPaths result{NodeSet(n), 0, net.paths()};
  for (const auto& path : result.paths)
    for (NodeId x : path)
      if (!free.contains(x)) result.added.insert(x);
  result.weight = total_weight(weights, result.added);
  return result;
}

}  // namespace kmcds
