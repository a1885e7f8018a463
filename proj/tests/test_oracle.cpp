#include <doctest.h>

#include <random>
#include <stdexcept>

#include "kmcds/connectivity.hpp"
#include "kmcds/generators.hpp"
#include "kmcds/oracle.hpp"
#include "kmcds/solver.hpp"
#include "kmcds/subsets.hpp"
#include "support/graphs.hpp"

using namespace kmcds;
using namespace kmcds::testing;

TEST_CASE("oracle on named graphs") {
  const OracleResult c5 = opt_kmcds(unit_instance(cycle(5), 1, 1));
  REQUIRE(c5.optimum.has_value());
  CHECK(c5.weight == 3);
  // Lexicographically first weight-3 answer.
  CHECK(*c5.optimum == NodeSet(5, {0, 1, 2}));

  std::mt19937_64 rng(4);
  for (int k = 1; k <= 4; ++k) {
    const Instance in = make_instance(complete(k + 1), random_weights(rng, k + 1, 1, 9), k, k);
    const OracleResult o = opt_kmcds(in);
    REQUIRE(o.optimum.has_value());
    CHECK(o.weight == total_weight(in.weights, NodeSet::full(k + 1)));
  }

  CHECK_FALSE(opt_kmcds(unit_instance(path(4), 2, 2)).optimum.has_value());
  CHECK_THROWS_AS(opt_kmcds(unit_instance(path(17), 1, 1)), std::invalid_argument);
}

TEST_CASE("subset order") {
  CHECK(subset_lex_less(0b001, 0b011));
  CHECK(subset_lex_less(0b011, 0b101));
  CHECK(subset_lex_less(0b101, 0b010));
  CHECK_FALSE(subset_lex_less(0b010, 0b010));
  const std::vector<Weight> w{2, 1, 1};
  const auto order = subsets_by_weight(w);
  REQUIRE(order.size() == 8);
  CHECK(order[0] == 0);
  CHECK(order[1] == 0b010);
  CHECK(order[2] == 0b100);
  CHECK(order[3] == 0b001);
  CHECK(order[4] == 0b110);
}

TEST_CASE("pruned and unpruned enumeration agree") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 250; ++trial) {
    const int n = 2 + trial % 7;
    const int k = 1 + trial % 3;
    const int m = k + trial % 2;
    const Graph g = random_graph(rng, n, 0.65);
    const Instance in = make_instance(g, random_weights(rng, n, 0, 6), k, m);
    const OracleResult fast = opt_kmcds(in);
    const OracleResult slow = opt_kmcds_unpruned(in);
    REQUIRE(fast.optimum.has_value() == slow.optimum.has_value());
    REQUIRE(fast.optimum.has_value() == precheck(in).ok);
    if (fast.optimum) {
      REQUIRE(fast.weight == slow.weight);
      REQUIRE(*fast.optimum == *slow.optimum);
      REQUIRE(is_kmcds(in, *fast.optimum));
    }
  }
}

TEST_CASE("oracle agrees with precheck on larger graphs") {
  for (int i = 0; i < 20; ++i) {
    const Instance in = gen_gnp(12, 0.45, {1, 5}, derive_seed(3, i), 1 + i % 3, 2 + i % 3);
    REQUIRE(opt_kmcds(in).optimum.has_value() == precheck(in).ok);
  }
}
