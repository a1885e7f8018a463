#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/pair_augment.hpp"
#include "kmcds/solver.hpp"
#include "support/graphs.hpp"

using namespace kmcds;
using namespace kmcds::testing;

namespace {

void check_forest(const Graph& h, const NodeSet& r, int k, const AugmentingForest& j) {
  REQUIRE(is_forest(h.node_count(), j.edges));
  REQUIRE(static_cast<int>(j.edges.size()) <= r.size() - 1);
  if (r.size() == k) REQUIRE(static_cast<int>(j.edges.size()) <= k - 1);
  REQUIRE(is_k_connected(h.with_edges(j.edges), k));
  for (const auto& [u, v] : j.edges) {
    REQUIRE(r.contains(u));
    REQUIRE(r.contains(v));
  }
  for (std::size_t drop = 0; drop < j.edges.size(); ++drop) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < j.edges.size(); ++i)
      if (i != drop) rest.push_back(j.edges[i]);
    REQUIRE_FALSE(is_k_connected(h.with_edges(rest), k));
  }
}

// Cheapest P outside `free` giving k disjoint u-v paths, by enumeration.
Weight brute_pair_optimum(const Graph& g, const std::vector<Weight>& w, const NodeSet& free, int u, int v,
                          int k) {
  std::uint32_t base = 0;
  std::vector<int> pool;
  for (int x = 0; x < g.node_count(); ++x) {
    if (free.contains(x)) base |= 1u << x;
    else pool.push_back(x);
  }
  Weight best = -1;
  for (std::uint32_t s = 0; s < (1u << pool.size()); ++s) {
    std::uint32_t present = base;
    Weight cost = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (s >> i & 1u) {
        present |= 1u << pool[i];
        cost += w[pool[i]];
      }
    if (best >= 0 && cost >= best) continue;
    int lu = 0, lv = 0, idx = 0;
    for (int x = 0; x < g.node_count(); ++x)
      if (present >> x & 1u) {
        if (x == u) lu = idx;
        if (x == v) lv = idx;
        ++idx;
      }
    if (brute_local_connectivity(brute_induced(g, present), lu, lv) >= k) best = cost;
  }
  return best;
}

}  // namespace

TEST_CASE("already k-connected H needs no edges") {
  const Graph h = petersen();
  const NodeSet r(10, {0, 3, 6});
  const AugmentingForest j = minimal_augmenting_forest(h, r, 3);
  CHECK(j.edges.empty());
}

TEST_CASE("two triangles joined by one link") {
  const Graph h(6, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const NodeSet r(6, {2, 4});
  const AugmentingForest j = minimal_augmenting_forest(h, r, 1);
  CHECK(j.edges == std::vector<Edge>{{2, 4}});
  check_forest(h, r, 1, j);
}

TEST_CASE("open six-cycle closed by one edge") {
  const Graph h = path(6);
  const NodeSet r(6, {0, 5});
  const AugmentingForest j = minimal_augmenting_forest(h, r, 2);
  CHECK(j.edges == std::vector<Edge>{{0, 5}});
  check_forest(h, r, 2, j);
}

TEST_CASE("six-cycle instance through the pipeline") {
  const Instance in = unit_instance(cycle(6), 2, 2);
  SolverConfig config;
  config.prune = false;
  const SolutionReport report = solve_general(in, config);
  CHECK(report.forest.edges.size() <= 1);
  CHECK(report.attachment.size() == 2);
  CHECK(is_forest(6, report.forest.edges));
  CHECK(is_kmcds(in, report.solution));
}

TEST_CASE("forest precondition violation") {
  // Two separate edges cannot become 2-connected by one link.
  const Graph h(4, std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_THROWS_AS(minimal_augmenting_forest(h, NodeSet(4, {0, 2}), 2), std::logic_error);
}

TEST_CASE("minimal forests on random graphs") {
  std::mt19937_64 rng(23);
  int runs = 0;
  for (int trial = 0; trial < 2000 && runs < 150; ++trial) {
    const int n = 5 + trial % 6;
    const int k = 1 + trial % 4;
    const Graph h = random_graph(rng, n, 0.55);
    NodeSet r(n);
    std::vector<NodeId> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < k; ++i) r.insert(order[i]);
    std::vector<Edge> clique;
    for (NodeId a : r.members())
      for (NodeId b : r.members())
        if (a < b && !h.has_edge(a, b)) clique.emplace_back(a, b);
    if (!is_k_connected(h.with_edges(clique), k)) continue;
    ++runs;
    check_forest(h, r, k, minimal_augmenting_forest(h, r, k));
  }
  CHECK(runs >= 100);
}

TEST_CASE("k disjoint paths at minimum weight") {
  const std::vector<Weight> unit(4, 1);
  const Graph k4 = complete(4);
  CHECK(min_weight_k_paths(k4, unit, NodeSet(4, {0, 1}), 0, 1, 1).added.empty());

  const PairPaths middle = min_weight_k_paths(path(3), std::vector<Weight>(3, 1), NodeSet(3, {0, 2}), 0, 2, 1);
  CHECK(middle.added == NodeSet(3, {1}));

  const Graph k4_minus = k4.without_edges(std::vector<Edge>{{0, 1}});
  const NodeSet ends(4, {0, 1});
  CHECK(brute_pair_optimum(k4_minus, unit, ends, 0, 1, 2) == 2);
  const PairPaths two = min_weight_k_paths(k4_minus, unit, ends, 0, 1, 2);
  CHECK(two.added == NodeSet(4, {2, 3}));
  CHECK(two.weight == 2);
  CHECK(two.paths.size() == 2);

  CHECK_THROWS_AS(min_weight_k_paths(k4_minus, unit, ends, 0, 1, 3), InfeasibleError);
  CHECK_THROWS_AS(min_weight_k_paths(k4_minus, unit, NodeSet(4, {0}), 0, 1, 2), std::invalid_argument);
}

TEST_CASE("pair paths against enumeration") {
  std::mt19937_64 rng(61);
  int runs = 0, exact = 0;
  for (int trial = 0; trial < 1000 && runs < 150; ++trial) {
    const int n = 5 + trial % 8;
    const int k = 1 + trial % 3;
    const Graph g = random_graph(rng, n, 0.5);
    const auto w = random_weights(rng, n, 0, 9);
    NodeSet free(n);
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) free.insert(v);
    free.insert(0);
    free.insert(1);
    if (local_connectivity(g, 0, 1, k) < k) continue;
    ++runs;
    const PairPaths p = min_weight_k_paths(g, w, free, 0, 1, k);
    const Weight optimum = brute_pair_optimum(g, w, free, 0, 1, k);
    REQUIRE(p.weight == total_weight(w, p.added));
    REQUIRE(p.weight <= 2 * optimum);
    if (p.weight == optimum) ++exact;
    const Subgraph sub = induced_subgraph(g, free.united(p.added));
    REQUIRE(local_connectivity(sub.graph, sub.to_local[0], sub.to_local[1], k) >= k);
  }
  CHECK(runs >= 100);
  MESSAGE("pair paths equal to the optimum: " << exact << " of " << runs);
}
