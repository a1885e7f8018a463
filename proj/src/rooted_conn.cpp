#include "kmcds/rooted_conn.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/flow.hpp"
#include "kmcds/subsets.hpp"

namespace kmcds {

RootedProblem make_rooted_problem(const Instance& instance, const NodeSet& terminals,
                                  const NodeSet& attachment) {
  RootedGraph g_r = attach_root(instance.graph, attachment, instance.k);
  const int universe = g_r.graph.node_count();
  RootedProblem problem;
  problem.root = g_r.root;
  problem.terminals = terminals.resized(universe);
  problem.fixed = problem.terminals;
  problem.fixed.insert(g_r.root);
  problem.weights = instance.weights;
  problem.weights.push_back(0);
  problem.k = instance.k;
  problem.graph = std::move(g_r.graph);
  return problem;
}

bool rooted_feasible(const RootedProblem& problem, const NodeSet& selected) {
  const NodeSet present = problem.fixed.united(selected);
  const Subgraph h = induced_subgraph(problem.graph, present);
  const NodeId root = h.to_local[problem.root];
  for (NodeId t : problem.terminals.members()) {
    if (t == problem.root) continue;
    if (h.to_local[t] < 0) return false;
    if (local_connectivity(h.graph, h.to_local[t], root, problem.k) < problem.k) return false;
  }
  return true;
}

const char* backend_name(RootedBackend backend) {
  return backend == RootedBackend::kExact ? "exact" : "flow-union";
}

GuaranteeInfo backend_guarantee(RootedBackend backend, int terminal_count, bool edge_costs) {
  GuaranteeInfo info;
  info.cited_beta_k = "beta_k (edge costs): 2 for k=2, 6 2/3 for k=3, O(k ln k) for k>=4; O(1) on unit-disk graphs";
  info.cited_beta_prime_k = "beta'_k (node weights): O(k^2 ln n)";
  if (backend == RootedBackend::kExact) {
    info.backend = "exact";
    info.expression = "1";
    info.value = 1.0;
  } else {
    info.backend = edge_costs ? "flow-union-edge-cost" : "flow-union";
    info.expression = "2*|T|";
    info.value = 2.0 * terminal_count;
  }
  return info;
}

namespace {

std::vector<NodeId> terminal_order(const RootedProblem& problem) {
  std::vector<NodeId> order;
  for (NodeId t : problem.terminals.members())
    if (t != problem.root) order.push_back(t);
  std::vector<Weight> around(static_cast<std::size_t>(problem.graph.node_count()), 0);
  for (NodeId t : order)
    for (NodeId x : problem.graph.adjacent(t)) around[t] += problem.weights[x];
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return around[a] > around[b]; });
  return order;
}

int terminal_count(const RootedProblem& problem) {
  return problem.terminals.size() - (problem.terminals.contains(problem.root) ? 1 : 0);
}

[[noreturn]] void throw_short_flow(NodeId t, int flow, int k) {
  throw InfeasibleError("terminal " + std::to_string(t) + " reaches the root only " +
                        std::to_string(flow) + " < " + std::to_string(k) + " times");
}

}  // namespace

NodeSet flow_union_backend(const RootedProblem& problem) {
  const int n = problem.graph.node_count();
  NodeSet selected(n);
  // Pool costs are weight·(n+1) + 1: minimum weight first, then fewest new nodes.
  const SplitFlowNetwork::Cost scale = n + 1;
  for (NodeId t : terminal_order(problem)) {
    std::vector<SplitFlowNetwork::Cost> cost(static_cast<std::size_t>(n), 0);
    for (NodeId v = 0; v < n; ++v)
      if (!problem.fixed.contains(v) && !selected.contains(v)) cost[v] = problem.weights[v] * scale + 1;
    SplitFlowNetwork net(problem.graph, t, problem.root, cost);
    const int flow = net.min_cost_flow(problem.k);
    if (flow < problem.k) throw_short_flow(t, flow, problem.k);
    for (const auto& path : net.paths())
      for (NodeId x : path)
        if (!problem.fixed.contains(x)) selected.insert(x);
  }
  return selected;
}

NodeSet exact_backend(const RootedProblem& problem) {
  const std::vector<NodeId> pool = problem.pool().members();
  if (pool.size() > 20) throw std::invalid_argument("exact_backend: pool has more than 20 nodes");
  std::vector<Weight> pool_weights;
  for (NodeId v : pool) pool_weights.push_back(problem.weights[v]);
  const int n = problem.graph.node_count();
  for (std::uint32_t mask : subsets_by_weight(pool_weights)) {
    NodeSet candidate = mask_to_set(mask, pool, n);
    if (rooted_feasible(problem, candidate)) return candidate;
  }
  const NodeSet all = problem.pool();
  throw InfeasibleError("exact_backend: even the full pool of " + std::to_string(all.size()) +
                        " nodes is infeasible");
}

NodeSet prune_selection(const RootedProblem& problem, NodeSet selected) {
  std::vector<NodeId> order = selected.members();
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return problem.weights[a] > problem.weights[b]; });
  // Feasibility is monotone in S, so one pass leaves an inclusion-minimal set.
  for (NodeId v : order) {
    selected.erase(v);
    if (!rooted_feasible(problem, selected)) selected.insert(v);
  }
  return selected;
}

RootedSolution solve_rooted_nodeweight(const RootedProblem& problem, RootedBackend backend,
                                       bool prune) {
  RootedSolution solution;
  solution.selected = backend == RootedBackend::kExact ? exact_backend(problem)
                                                       : flow_union_backend(problem);
  if (prune) solution.selected = prune_selection(problem, std::move(solution.selected));
  solution.guarantee = backend_guarantee(backend, terminal_count(problem), false);
  return solution;
}

std::vector<Weight> conversion_edge_costs(const Graph& g, std::span<const Weight> node_weights) {
  std::vector<Weight> costs;
  costs.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) costs.push_back(node_weights[u] + node_weights[v]);
  return costs;
}

RootedSolution solve_rooted_edgecost(const RootedProblem& problem, std::span<const Weight> edge_costs,
                                     RootedBackend backend, bool prune) {
  const Graph& g = problem.graph;
  const int n = g.node_count();
  const std::vector<Edge> edges = g.edges();
  if (edge_costs.size() != edges.size())
    throw std::invalid_argument("solve_rooted_edgecost: edge cost count mismatch");
  RootedSolution solution;
  solution.guarantee = backend_guarantee(backend, terminal_count(problem), backend == RootedBackend::kFlowUnion);
  std::vector<char> bought(edges.size(), 0);

  if (backend == RootedBackend::kExact) {
    solution.selected = exact_backend(problem);
  } else {
    solution.selected = NodeSet(n);
    const SplitFlowNetwork::Cost scale = static_cast<SplitFlowNetwork::Cost>(edges.size()) + 1;
    auto edge_index = [&](NodeId a, NodeId b) {
      const Edge e{std::min(a, b), std::max(a, b)};
      return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
    };
    for (NodeId t : terminal_order(problem)) {
      std::vector<SplitFlowNetwork::Cost> arc_cost(edges.size(), 0);
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (!bought[i]) arc_cost[i] = edge_costs[i] * scale + 1;
      SplitFlowNetwork net(g, t, problem.root, {}, arc_cost);
      const int flow = net.min_cost_flow(problem.k);
      if (flow < problem.k) throw_short_flow(t, flow, problem.k);
      for (const auto& path : net.paths()) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) bought[edge_index(path[i], path[i + 1])] = 1;
        for (NodeId x : path)
          if (!problem.fixed.contains(x)) solution.selected.insert(x);
      }
    }
  }
  if (prune) solution.selected = prune_selection(problem, std::move(solution.selected));

  const NodeSet present = problem.fixed.united(solution.selected);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const bool keep = backend == RootedBackend::kExact ? true : bought[i] != 0;
    if (keep && present.contains(u) && present.contains(v)) {
      solution.edges.push_back(edges[i]);
      solution.edge_cost += edge_costs[i];
    }
  }
  return solution;
}

ConversionCheck check_conversion_inequality(std::span<const Weight> weights, const NodeSet& nodes,
                                            std::span<const Edge> edges) {
  ConversionCheck check;
  std::vector<int> degree(static_cast<std::size_t>(nodes.universe()), 0);
  for (auto [u, v] : edges) {
    if (!nodes.contains(u) || !nodes.contains(v))
      throw std::invalid_argument("check_conversion_inequality: edge leaves the node set");
    ++degree[u];
    ++degree[v];
    check.edge_cost += weights[u] + weights[v];
  }
  const std::vector<NodeId> members = nodes.members();
  if (!members.empty()) {
    check.min_degree = degree[members.front()];
    check.max_degree = degree[members.front()];
  }
  for (NodeId v : members) {
    check.min_degree = std::min(check.min_degree, degree[v]);
    check.max_degree = std::max(check.max_degree, degree[v]);
    check.node_weight += weights[v];
  }
  check.holds = static_cast<Weight>(check.min_degree) * check.node_weight <= check.edge_cost &&
                check.edge_cost <= static_cast<Weight>(check.max_degree) * check.node_weight;
  return check;
}

}  // namespace kmcds
