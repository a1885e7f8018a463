#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// f(T) = Σ_v min(m, cov_T(v)), where cov_T(v) = m for v ∈ T and
/// |Γ(v) ∩ T| otherwise. f(V) = m·n, and T is m-dominating iff f(T) = m·n.
std::int64_t coverage_potential(const Graph& g, const NodeSet& set, int m);

struct GreedyTrace {
  NodeSet set;
  std::vector<NodeId> picks;               // in selection order
  std::vector<std::int64_t> potentials;    // f before the first pick and after each
};

/// Density greedy for weighted m-multicover: repeatedly add the node with
/// the largest potential gain per unit weight (zero-weight nodes with a
/// positive gain first, ties to the lowest index).
GreedyTrace greedy_mds_trace(const Graph& g, std::span<const Weight> weights, int m);

/// The greedy set with redundant nodes dropped afterwards (heaviest first,
/// ties to the lowest index).
NodeSet greedy_mds(const Instance& instance);

/// Minimum-weight m-dominating set by enumeration; ties go to the
/// lexicographically smallest subset. Throws std::invalid_argument for n > 16.
NodeSet opt_mds_bruteforce(const Instance& instance);

/// ln(Δ + m) + 1.
double multicover_bound(int max_degree, int m);

/// alg <= (ln(Δ + m) + 1) · opt, with the logarithm bracketed so that a
/// rounding error can only make the answer false.
bool within_multicover_bound(Weight alg, Weight opt, int max_degree, int m);

}  // namespace kmcds
