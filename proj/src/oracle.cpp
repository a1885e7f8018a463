#include "kmcds/oracle.hpp"

#include <bit>
#include <chrono>
#include <stdexcept>

#include "kmcds/connectivity.hpp"
#include "kmcds/solver.hpp"
#include "kmcds/subsets.hpp"

namespace kmcds {

namespace {

using Clock = std::chrono::steady_clock;

double since_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<NodeId> identity_positions(int n) {
  std::vector<NodeId> positions(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) positions[v] = v;
  return positions;
}

}  // namespace

OracleResult opt_kmcds(const Instance& instance) {
  const auto start = Clock::now();
  const Graph& g = instance.graph;
  const int n = g.node_count();
  if (n > 16) throw std::invalid_argument("opt_kmcds: n > 16");
  const int k = instance.k;
  const int m = instance.m;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId w : g.adjacent(v)) adj[v] |= 1u << w;
  const std::vector<NodeId> positions = identity_positions(n);

  OracleResult result;
  for (std::uint32_t mask : subsets_by_weight(instance.weights)) {
    ++result.examined;
    if (std::popcount(mask) <= k) continue;
    bool ok = true;
    for (NodeId v = 0; v < n && ok; ++v) {
      const int inside = std::popcount(adj[v] & mask);
      // Outside nodes need m neighbours in the set, inside nodes k.
      ok = (mask >> v & 1u) ? inside >= k : inside >= m;
    }
    if (!ok) continue;
    const NodeSet candidate = mask_to_set(mask, positions, n);
    if (!is_k_connected(induced_subgraph(g, candidate).graph, k)) continue;
    result.optimum = candidate;
    result.weight = total_weight(instance.weights, candidate);
    break;
  }
  result.elapsed_ms = since_ms(start);
  return result;
}

OracleResult opt_kmcds_unpruned(const Instance& instance) {
  const auto start = Clock::now();
  const int n = instance.node_count();
  if (n > 16) throw std::invalid_argument("opt_kmcds_unpruned: n > 16");
  const std::vector<NodeId> positions = identity_positions(n);

  OracleResult result;
  std::optional<std::uint32_t> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    ++result.examined;
    const NodeSet candidate = mask_to_set(mask, positions, n);
    if (!is_kmcds(instance, candidate)) continue;
    const Weight weight = total_weight(instance.weights, candidate);
    if (!best || weight < result.weight || (weight == result.weight && subset_lex_less(mask, *best))) {
      best = mask;
      result.weight = weight;
    }
  }
  if (best) result.optimum = mask_to_set(*best, positions, n);
  result.elapsed_ms = since_ms(start);
  return result;
}

}  // namespace kmcds
