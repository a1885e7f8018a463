#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kmcds/connectivity.hpp"
#include "kmcds/dominating_set.hpp"
#include "support/graphs.hpp"

using namespace kmcds;
using namespace kmcds::testing;

namespace {

// Cheapest m-dominating set by plain enumeration (no ordering tricks).
Weight brute_mds_weight(const Instance& in) {
  const int n = in.node_count();
  const auto adj = masks(in.graph);
  Weight best = -1;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      if (!(s >> v & 1u) && std::popcount(adj[v] & s) < in.m) ok = false;
    if (!ok) continue;
    Weight w = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1u) w += in.weights[v];
    if (best < 0 || w < best) best = w;
  }
  return best;
}

}  // namespace

TEST_CASE("greedy on a star") {
  const Instance one = unit_instance(star(5), 1, 1);
  CHECK(greedy_mds(one) == NodeSet(6, {0}));

  const Instance two = unit_instance(star(5), 1, 2);
  const NodeSet leaves(6, {1, 2, 3, 4, 5});
  CHECK(greedy_mds(two) == leaves);
  CHECK(brute_mds_weight(two) == 5);
  CHECK(opt_mds_bruteforce(two) == leaves);
}

TEST_CASE("greedy on K4 with m = 3") {
  const Instance in = unit_instance(complete(4), 1, 3);
  const NodeSet g = greedy_mds(in);
  CHECK(g.size() == 3);
  CHECK(is_m_dominating(in.graph, g, 3).ok);
  CHECK(brute_mds_weight(in) == 3);
  CHECK(opt_mds_bruteforce(in).size() == 3);
}

TEST_CASE("coverage potential") {
  const Graph s = star(5);
  CHECK(coverage_potential(s, NodeSet(6), 2) == 0);
  CHECK(coverage_potential(s, NodeSet(6, {0}), 2) == 2 + 5);
  CHECK(coverage_potential(s, NodeSet::full(6), 2) == 12);
}

TEST_CASE("zero-weight nodes are taken first") {
  const Instance in = make_instance(path(5), {4, 0, 4, 4, 0}, 1, 1);
  const GreedyTrace trace = greedy_mds_trace(in.graph, in.weights, 1);
  REQUIRE(trace.picks.size() >= 2);
  CHECK(trace.picks[0] == 1);
  CHECK(trace.picks[1] == 4);
  CHECK(total_weight(in.weights, trace.set) == 0);
}

TEST_CASE("greedy properties on random instances") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 11;
    const int m = 1 + trial % 4;
    const Graph g = random_graph(rng, n, 0.3 + 0.05 * (trial % 10));
    const Instance in = make_instance(g, random_weights(rng, n, trial % 7 == 0 ? 0 : 1, 9), 1, m);

    const GreedyTrace trace = greedy_mds_trace(in.graph, in.weights, m);
    REQUIRE(is_m_dominating(in.graph, trace.set, m).ok);
    REQUIRE(trace.potentials.size() == trace.picks.size() + 1);
    REQUIRE(trace.picks.size() <= static_cast<std::size_t>(n));
    CHECK(trace.potentials.back() == static_cast<std::int64_t>(m) * n);
    for (std::size_t i = 1; i < trace.potentials.size(); ++i) REQUIRE(trace.potentials[i] > trace.potentials[i - 1]);

    const Weight alg = total_weight(in.weights, trace.set);
    const Weight opt = brute_mds_weight(in);
    REQUIRE(total_weight(in.weights, opt_mds_bruteforce(in)) == opt);
    REQUIRE(alg >= opt);
    REQUIRE(within_multicover_bound(alg, opt, degree_stats(g).max_degree, m));

    const NodeSet cleaned = greedy_mds(in);
    REQUIRE(is_m_dominating(in.graph, cleaned, m).ok);
    REQUIRE(total_weight(in.weights, cleaned) <= alg);
    for (NodeId v : cleaned.members()) {
      NodeSet fewer = cleaned;
      fewer.erase(v);
      REQUIRE_FALSE(is_m_dominating(in.graph, fewer, m).ok);
    }
  }
}

TEST_CASE("multicover bound arithmetic") {
  CHECK(multicover_bound(4, 1) == doctest::Approx(std::log(5.0) + 1));
  CHECK(within_multicover_bound(5, 5, 3, 1));
  CHECK(within_multicover_bound(0, 0, 3, 1));
  CHECK_FALSE(within_multicover_bound(1, 0, 3, 1));
  // ln(2) + 1 ≈ 1.693: 16/10 fits and 17/10 does not.
  CHECK(within_multicover_bound(16, 10, 1, 1));
  CHECK_FALSE(within_multicover_bound(17, 10, 1, 1));
}

TEST_CASE("brute force size limit") {
  CHECK_THROWS_AS(opt_mds_bruteforce(unit_instance(path(17), 1, 1)), std::invalid_argument);
}
