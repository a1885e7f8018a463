#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Node-split flow network for internally disjoint source-sink paths.
///
/// Every node v becomes v_in -> v_out with capacity 1 and cost node_cost[v];
/// the source and sink get an unbounded internal arc. Every undirected edge
/// uv becomes u_out -> v_in and v_out -> u_in, capacity 1, cost edge_cost.
/// An integral flow of value f therefore decomposes into f internally
/// node-disjoint paths, and an adjacent source/sink pair contributes its
/// direct edge as one path.
class SplitFlowNetwork {
 public:
  using Cost = std::int64_t;

  /// `node_costs` may be empty (all zero). `edge_costs`, when non-empty, is
  /// indexed like `g.edges()`.
  SplitFlowNetwork(const Graph& g, NodeId source, NodeId sink,
                   std::span<const Cost> node_costs = {},
                   std::span<const Cost> edge_costs = {});

  /// Augments along BFS paths until `cap` units flow or none remain.
  int max_flow(int cap);

  /// Successive shortest paths (Bellman-Ford on the residual network) until
  /// `target` units flow or the sink is unreachable. Returns the flow value.
  int min_cost_flow(int target);

  int flow_value() const { return flow_; }
  Cost cost() const { return cost_; }

  /// Flow decomposition into simple source-to-sink node sequences, in the
  /// order of the source's outgoing arcs.
  std::vector<std::vector<NodeId>> paths() const;

  /// After max_flow below `cap`: a minimum source-sink vertex separator read
  /// off the residual cut. A direct source-sink edge adds nothing to it.
  std::vector<NodeId> min_separator() const;

 private:
  struct Arc {
    int to;
    int cap;
    Cost cost;
  };

  static constexpr int kUnbounded = 1 << 29;

  int add_arc(int from, int to, int cap, Cost cost);
  int in(NodeId v) const { return 2 * v; }
  int out(NodeId v) const { return 2 * v + 1; }
  bool augment(bool use_costs);

  const Graph* graph_;
  NodeId source_;
  NodeId sink_;
  std::vector<Arc> arcs_;            // arc i and i^1 are residual twins
  std::vector<int> original_cap_;
  std::vector<std::vector<int>> out_arcs_;
  std::vector<int> internal_arc_;    // per original node
  int flow_ = 0;
  Cost cost_ = 0;
};

}  // namespace kmcds
