#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "kmcds/connectivity.hpp"
#include "kmcds/dominating_set.hpp"
#include "kmcds/generators.hpp"
#include "kmcds/io.hpp"
#include "kmcds/oracle.hpp"
#include "kmcds/solver.hpp"
#include "support/graphs.hpp"

using namespace kmcds;
using namespace kmcds::testing;

namespace {

// Both verifiers, written against the brute-force helpers.
bool brute_feasible(const Instance& in, const NodeSet& set) {
  std::uint32_t mask = 0;
  for (NodeId v : set.members()) mask |= 1u << v;
  const auto adj = masks(in.graph);
  for (int v = 0; v < in.node_count(); ++v)
    if (!set.contains(v) && std::popcount(adj[v] & mask) < in.m) return false;
  return brute_k_connected(brute_induced(in.graph, mask), in.k);
}

void check_report(const Instance& in, const SolutionReport& r) {
  REQUIRE(is_kmcds(in, r.solution));
  REQUIRE(r.certificate.feasible());
  REQUIRE(r.total == total_weight(in.weights, r.solution));
  REQUIRE(r.weight_terminals + r.weight_steiner + r.weight_pairs - r.weight_pruned == r.total);
  REQUIRE(is_m_dominating(in.graph, r.terminals, in.m).ok);
  const int size = r.solution.size();
  REQUIRE(r.certificate.witnesses.size() == static_cast<std::size_t>(size * (size - 1) / 2));
  for (const auto& w : r.certificate.witnesses) REQUIRE(validate_witness(in.graph, r.solution, w, in.k));
}

Instance circle_instance(int n, std::int64_t radius) {
  Geometry geo;
  geo.scale = 1000;
  geo.radius = radius;
  for (int i = 0; i < n; ++i) {
    const double a = 2 * M_PI * i / n;
    geo.coords.push_back({500 + std::llround(100 * std::cos(a)), 500 + std::llround(100 * std::sin(a))});
  }
  Graph g(n, unit_disk_edges(geo));
  return make_instance(std::move(g), std::vector<Weight>(n, 1), 2, 2, geo);
}

}  // namespace

TEST_CASE("precheck") {
  CHECK(precheck(unit_instance(complete(5), 3, 3)).ok);
  CHECK(precheck(unit_instance(complete(5), 3, 4)).ok);
  const PrecheckResult p4 = precheck(unit_instance(path(4), 2, 2));
  CHECK_FALSE(p4.ok);
  REQUIRE(p4.witness.has_value());
  REQUIRE(p4.witness->separator.size() == 1);
  CHECK((p4.witness->separator[0] == 1 || p4.witness->separator[0] == 2));
  CHECK(precheck(unit_instance(petersen(), 3, 3)).ok);
  CHECK_THROWS_AS(solve_general(unit_instance(path(4), 2, 2), {}), InfeasibleInstance);
}

TEST_CASE("complete graph on k+1 nodes") {
  for (int k = 1; k <= 4; ++k) {
    const Instance in = unit_instance(complete(k + 1), k, k);
    const SolutionReport r = solve_general(in, {});
    check_report(in, r);
    CHECK(r.solution == NodeSet::full(k + 1));
    CHECK(r.total == k + 1);
    const OracleResult o = opt_kmcds(in);
    REQUIRE(o.optimum.has_value());
    CHECK(o.weight == k + 1);
  }
}

TEST_CASE("five-cycle with k = m = 1") {
  const Instance in = unit_instance(cycle(5), 1, 1);
  const SolutionReport r = solve_general(in, {});
  check_report(in, r);
  CHECK(r.total == 3);
  CHECK(opt_kmcds(in).weight == 3);
  CHECK(r.total <= r.ratio_bound * 3);
  const auto members = r.solution.members();
  // Three consecutive cycle nodes.
  CHECK(is_k_connected(induced_subgraph(in.graph, r.solution).graph, 1));
  CHECK(members.size() == 3);
}

TEST_CASE("zero weights") {
  const Instance in = make_instance(petersen(), std::vector<Weight>(10, 0), 3, 4);
  const SolutionReport r = solve_general(in, {});
  check_report(in, r);
  CHECK(r.total == 0);
}

TEST_CASE("unit-disk: six points on a circle") {
  const Instance in = circle_instance(6, 1000);
  CHECK(in.graph == complete(6));
  const SolutionReport r = solve_unit_disk(in, {});
  check_report(in, r);
  REQUIRE(r.conversion.has_value());
  CHECK(r.conversion->holds);
  const OracleResult o = opt_kmcds(in);
  REQUIRE(o.optimum.has_value());
  CHECK(o.weight == 3);
  CHECK(r.total <= r.ratio_bound * o.weight);
}

TEST_CASE("unit-disk: three by three grid") {
  Geometry geo;
  geo.scale = 10;
  geo.radius = 10;
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) geo.coords.push_back({10 * x, 10 * y});
  const Instance in = make_instance(Graph(9, unit_disk_edges(geo)), std::vector<Weight>(9, 1), 1, 1, geo);
  CHECK(in.graph.edge_count() == 12);
  const SolutionReport r = solve_unit_disk(in, {});
  check_report(in, r);
  const OracleResult o = opt_kmcds(in);
  REQUIRE(o.optimum.has_value());
  CHECK(o.weight == 3);
  CHECK(r.total >= o.weight);
  CHECK(r.total <= r.ratio_bound * o.weight);
}

TEST_CASE("unit-disk: no edges") {
  const Instance in = gen_unit_disk(6, 0.0, {1, 1}, 5, 1, 1);
  CHECK(in.graph.edge_count() == 0);
  CHECK_THROWS_AS(solve_unit_disk(in, {}), InfeasibleInstance);
  CHECK_THROWS_AS(solve_unit_disk(unit_instance(complete(4), 1, 1), {}), std::invalid_argument);
}

TEST_CASE("guess-root on named graphs") {
  SolverConfig config;
  config.variant = Variant::kGuessRoot;

  const Instance k4 = unit_instance(complete(4), 3, 3);
  const SolutionReport a = solve_guess_root(k4, config);
  check_report(k4, a);
  CHECK(a.total == 4);
  CHECK(opt_kmcds(k4).weight == 4);
  CHECK_FALSE(a.fallback);

  const Instance pet = unit_instance(petersen(), 3, 3);
  const SolutionReport b = solve_guess_root(pet, config);
  check_report(pet, b);
  CHECK(brute_feasible(pet, b.solution));
  CHECK_FALSE(b.fallback);
  CHECK(b.forest.edges.empty());
  CHECK(b.pair_nodes.empty());
  CHECK(b.guessed_root.has_value());

  const Instance c5 = unit_instance(cycle(5), 2, 2);
  const SolutionReport c = solve_guess_root(c5, config);
  check_report(c5, c);
  CHECK(c.solution == NodeSet::full(5));
  CHECK(opt_kmcds(c5).weight == 5);

  CHECK_THROWS_AS(solve_guess_root(unit_instance(complete(5), 1, 1), config), std::invalid_argument);
  CHECK_THROWS_AS(solve_guess_root(unit_instance(complete(6), 4, 4), config), std::invalid_argument);
}

TEST_CASE("enumerating R never loses to the min-weight rule") {
  std::mt19937_64 rng(8);
  int runs = 0;
  for (int trial = 0; trial < 200 && runs < 30; ++trial) {
    const Instance in = gen_gnp(11, 0.55, {1, 9}, derive_seed(77, trial), 1 + trial % 3, 1 + trial % 3 + trial % 2);
    if (!precheck(in).ok) continue;
    ++runs;
    SolverConfig base;
    base.prune = false;
    SolverConfig all = base;
    all.root_rule = RootRule::kEnumerate;
    const SolutionReport a = solve_general(in, base);
    const SolutionReport b = solve_general(in, all);
    check_report(in, a);
    check_report(in, b);
    CHECK(b.total <= a.total);
  }
  CHECK(runs >= 20);
}

TEST_CASE("plain pipeline keeps every stage") {
  std::mt19937_64 rng(12);
  int runs = 0;
  for (int trial = 0; trial < 300 && runs < 60; ++trial) {
    const int k = 1 + trial % 4;
    const Instance in = gen_gnp(9 + trial % 5, 0.6, {0, 9}, derive_seed(5, trial), k, k + trial % 3);
    if (!precheck(in).ok) continue;
    ++runs;
    for (RootedBackend backend : {RootedBackend::kFlowUnion, RootedBackend::kExact}) {
      SolverConfig config;
      config.prune = false;
      config.backend = backend;
      const SolutionReport r = solve_general(in, config);
      check_report(in, r);
      REQUIRE(brute_feasible(in, r.solution));
      REQUIRE(r.weight_pruned == 0);
      REQUIRE(r.solution.intersected(r.terminals) == r.terminals);
      REQUIRE(r.attachment.size() == k);
      REQUIRE(r.attachment.intersected(r.terminals) == r.attachment);
      REQUIRE(static_cast<int>(r.forest.edges.size()) <= k - 1);

      const OracleResult o = opt_kmcds(in);
      REQUIRE(o.optimum.has_value());
      REQUIRE(static_cast<double>(r.total) <= r.ratio_bound * static_cast<double>(o.weight) + 1e-9);
    }
  }
  CHECK(runs >= 40);
}

TEST_CASE("reports are deterministic") {
  const Instance in = gen_unit_disk(18, 0.45, {1, 20}, 4, 2, 3);
  REQUIRE(precheck(in).ok);
  for (Variant v : {Variant::kGeneral, Variant::kUnitDisk, Variant::kGuessRoot}) {
    SolverConfig config;
    config.variant = v;
    const std::string first = report_to_json(solve(in, config), false).dump(2);
    const std::string second = report_to_json(solve(in, config), false).dump(2);
    CHECK(first == second);
  }
}

TEST_CASE("name parsing") {
  CHECK(parse_variant("unit-disk") == Variant::kUnitDisk);
  CHECK(std::string(variant_name(Variant::kGuessRoot)) == "guess-root");
  CHECK(parse_backend("exact") == RootedBackend::kExact);
  CHECK(parse_root_rule("enumerate") == RootRule::kEnumerate);
  CHECK_THROWS_AS(parse_variant("fast"), std::invalid_argument);
}

TEST_CASE("pruning keeps feasibility and removes redundant nodes") {
  const Instance in = unit_instance(complete(6), 2, 2);
  const NodeSet pruned = prune_solution(in, NodeSet::full(6));
  CHECK(is_kmcds(in, pruned));
  CHECK(pruned.size() == 3);
}
