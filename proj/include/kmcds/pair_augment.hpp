#pragma once

#include <span>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Virtual edges on R that make H k-connected.
struct AugmentingForest {
  std::vector<Edge> edges;  // (u, v) with u < v, lexicographic
};

bool is_forest(int node_count, std::span<const Edge> edges);

/// Starts from the clique on R (minus edges already in H) and drops each
/// edge in lexicographic order while H ∪ J stays k-connected. Throws
/// std::logic_error if H ∪ clique(R) is not k-connected, or if the result is
/// not a forest with at most |R| - 1 edges (k - 1 in the pipeline).
AugmentingForest minimal_augmenting_forest(const Graph& h, const NodeSet& attachment, int k);

struct PairPaths {
  NodeSet added;  // P_uv: nodes outside `free` used by the paths
  Weight weight = 0;
  std::vector<std::vector<NodeId>> paths;
};

/// Cheapest node set P with k internally disjoint u-v paths inside
/// G[free ∪ P], via min-cost flow with free nodes at cost 0. Throws
/// std::invalid_argument if u or v is not free and InfeasibleError if
/// κ_G(u, v) < k.
PairPaths min_weight_k_paths(const Graph& g, std::span<const Weight> weights, const NodeSet& free,
                             NodeId u, NodeId v, int k);

}  // namespace kmcds
