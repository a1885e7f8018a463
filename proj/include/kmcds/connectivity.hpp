#pragma once

#include <optional>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// min(κ_g(u, v), cap). An edge uv counts as one path. Throws
/// std::invalid_argument when u == v or cap < 1.
int local_connectivity(const Graph& g, NodeId u, NodeId v, int cap);

/// A pair that falls short of the target, with a separating node set.
struct ConnectivityFailure {
  NodeId u = -1;
  NodeId v = -1;
  int connectivity = 0;
  std::vector<NodeId> separator;
};

/// First failing pair in the fixed check order (degree sum ascending, then
/// lexicographic), or nullopt when g is k-connected. Graphs with at most k
/// nodes fail with u = v = -1.
std::optional<ConnectivityFailure> find_connectivity_failure(const Graph& g, int k);

bool is_k_connected(const Graph& g, int k);

/// Every pair inside `terminals` has local connectivity >= k.
bool is_k_T_connected(const Graph& g, const NodeSet& terminals, int k);

/// Every node other than `root` has k internally disjoint paths to it.
bool is_k_in_connected_to_root(const Graph& g, NodeId root, int k);

struct DominationResult {
  bool ok = true;
  std::vector<int> counts;         // |Γ(v) ∩ S| for every node v
  std::vector<NodeId> violators;   // nodes outside S with fewer than m
};

DominationResult is_m_dominating(const Graph& g, const NodeSet& set, int m);

/// Brute force over every nonempty A ⊆ T ∪ S of
///   |Γ_H(A)| + |A ∩ R| >= k,   H = G_r[T ∪ S ∪ {r}] minus r.
/// Equivalent to k-in-connectivity of G_r[T ∪ S ∪ {r}] to r by Menger.
/// Throws std::invalid_argument when |T ∪ S| > 20.
bool check_cut_characterization(const RootedGraph& g_r, const NodeSet& terminals,
                                const NodeSet& steiner, int k);

/// Brute force over disjoint nonempty A, B with no A-B edge: each must leave
/// at least k nodes outside A ∪ B. Throws std::invalid_argument when |V| > 12.
bool check_subpartition_characterization(const Graph& g, int k);

/// k internally disjoint u-v paths as node sequences (u first, v last).
struct PairWitness {
  NodeId u = -1;
  NodeId v = -1;
  std::vector<std::vector<NodeId>> paths;
};

struct Certificate {
  int k = 0;
  int m = 0;
  bool dominating = false;
  bool connected = false;
  std::vector<int> domination_counts;  // meaningful for nodes outside the set
  std::vector<NodeId> undominated;
  std::vector<PairWitness> witnesses;  // original node ids
  std::optional<ConnectivityFailure> failure;  // original node ids

  bool feasible() const { return dominating && connected; }
};

/// Verifies `set` as a (k, m)-cds of g from scratch. With `with_witnesses`
/// every pair of the set gets k disjoint paths inside G[set].
Certificate certify(const Graph& g, const NodeSet& set, int k, int m, bool with_witnesses);

/// Re-checks one witness: k paths from u to v, each a walk along edges of
/// G[set], pairwise sharing only u and v.
bool validate_witness(const Graph& g, const NodeSet& set, const PairWitness& witness, int k);

}  // namespace kmcds
