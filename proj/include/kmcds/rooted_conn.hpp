#pragma once

#include <span>
#include <string>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Find a light S ⊆ pool such that in H_r = graph[fixed ∪ S] every terminal
/// has k internally disjoint paths to `root`.
///
/// For the plain pipeline `graph` is G_r (root = virtual node n attached to
/// R ⊆ T), terminals = T and fixed = T ∪ {r}. The guessed-root variant uses a
/// real root and also fixes the chosen neighbours. Fixed nodes are free.
struct RootedProblem {
  Graph graph;
  NodeId root = -1;
  NodeSet terminals;
  NodeSet fixed;
  std::vector<Weight> weights;
  int k = 1;

  NodeSet pool() const { return fixed.complement(); }
};

/// Builds the problem for the virtual-root pipeline: G_r from `attach_root`,
/// weights extended with 0 for r.
RootedProblem make_rooted_problem(const Instance& instance, const NodeSet& terminals,
                                  const NodeSet& attachment);

/// All terminals reach the root k times inside graph[fixed ∪ selected].
bool rooted_feasible(const RootedProblem& problem, const NodeSet& selected);

enum class RootedBackend { kFlowUnion, kExact };

const char* backend_name(RootedBackend backend);

/// The multiplicative bound proved for the backend that actually ran, plus
/// the literature ratios for this step carried as labels only.
struct GuaranteeInfo {
  std::string backend;
  std::string expression;
  double value = 0.0;
  std::string cited_beta_k;
  std::string cited_beta_prime_k;
};

GuaranteeInfo backend_guarantee(RootedBackend backend, int terminal_count, bool edge_costs);

/// Per terminal (descending neighbourhood weight, ties by index): a
/// minimum-cost k-flow to the root where fixed and already selected nodes
/// are free and pool nodes cost their weight; flow-carrying pool nodes join S.
/// Each step costs at most OPT, so w(S) <= 2|T|·OPT holds with room to spare.
/// Throws InfeasibleError naming the terminal when a flow falls short of k.
NodeSet flow_union_backend(const RootedProblem& problem);

/// Minimum-weight S by enumeration over the pool (at most 20 nodes).
NodeSet exact_backend(const RootedProblem& problem);

/// Drops selected nodes, heaviest first, while the selection stays feasible.
NodeSet prune_selection(const RootedProblem& problem, NodeSet selected);

struct RootedSolution {
  NodeSet selected;
  GuaranteeInfo guarantee;
  std::vector<Edge> edges;  // edge-cost runs only: chosen edges inside H_r
  Weight edge_cost = 0;
};

RootedSolution solve_rooted_nodeweight(const RootedProblem& problem, RootedBackend backend,
                                       bool prune = true);

/// c_uv = w_u + w_v for every edge of g, in `g.edges()` order.
std::vector<Weight> conversion_edge_costs(const Graph& g, std::span<const Weight> node_weights);

/// Flow-union with costs on edge arcs instead of node arcs; edges bought for
/// an earlier terminal are free afterwards. S = pool nodes touched by the
/// chosen edges. The exact backend ignores edge costs and returns the
/// optimum node selection.
RootedSolution solve_rooted_edgecost(const RootedProblem& problem, std::span<const Weight> edge_costs,
                                     RootedBackend backend, bool prune = true);

/// δ·w(S) <= c(F) <= Δ·w(S) for the subgraph (S, F) with c_uv = w_u + w_v.
struct ConversionCheck {
  int min_degree = 0;
  int max_degree = 0;
  Weight node_weight = 0;
  Weight edge_cost = 0;
  bool holds = false;
};

/// Every edge of `edges` must have both ends in `nodes`.
ConversionCheck check_conversion_inequality(std::span<const Weight> weights, const NodeSet& nodes,
                                            std::span<const Edge> edges);

}  // namespace kmcds
