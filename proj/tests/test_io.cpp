#include <doctest.h>

#include <string>

#include "kmcds/bench.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/generators.hpp"
#include "kmcds/io.hpp"
#include "kmcds/solver.hpp"
#include "support/graphs.hpp"

using namespace kmcds;
using namespace kmcds::testing;

TEST_CASE("instances survive a round trip") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance a = gen_unit_disk(12, 0.4, {0, 50}, seed, 2, 3);
    const std::string text = serialize_instance(a);
    CHECK(parse_instance(text) == a);
    CHECK(serialize_instance(parse_instance(text)) == text);

    const Instance b = gen_gnp(10, 0.4, {1, 9}, seed, 1, 2);
    CHECK(parse_instance(serialize_instance(b)) == b);
  }
}

TEST_CASE("fractional weights use the declared scale") {
  const std::string text = R"({"schema": 1, "k": 1, "m": 1, "weight_scale": 4,
    "nodes": [{"id": 0, "weight": 0.25}, {"id": 1, "weight": 1.5}],
    "edges": [[0, 1]]})";
  const Instance in = parse_instance(text);
  CHECK(in.weights == std::vector<Weight>{1, 6});
  CHECK(parse_instance(serialize_instance(in)) == in);

  const std::string off = R"({"schema": 1, "k": 1, "m": 1, "weight_scale": 4,
    "nodes": [{"id": 0, "weight": 0.3}], "edges": []})";
  CHECK_THROWS_AS(parse_instance(off), ParseError);
}

TEST_CASE("unit-disk files may omit edges") {
  const std::string text = R"({"schema": 1, "k": 1, "m": 1, "coord_scale": 10, "radius": 1,
    "nodes": [{"id": 0, "weight": 1, "x": 0, "y": 0},
              {"id": 1, "weight": 1, "x": 0.6, "y": 0.8},
              {"id": 2, "weight": 1, "x": 2, "y": 0}]})";
  const Instance in = parse_instance(text);
  REQUIRE(in.geometry.has_value());
  CHECK(in.graph.edges() == std::vector<Edge>{{0, 1}});

  // An edge list that disagrees with the coordinates is rejected.
  const std::string wrong = R"({"schema": 1, "k": 1, "m": 1, "coord_scale": 10, "radius": 1,
    "nodes": [{"id": 0, "weight": 1, "x": 0, "y": 0},
              {"id": 1, "weight": 1, "x": 2, "y": 0}],
    "edges": [[0, 1]]})";
  CHECK_THROWS_AS(parse_instance(wrong), ParseError);
}

TEST_CASE("parse errors carry a line number") {
  const std::string text = "{\n  \"schema\": 1,\n  \"k\": 1,\n  \"m\" 1\n}\n";
  try {
    parse_instance(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_instance(R"({"schema": 1, "m": 1, "nodes": [], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"schema": 9, "k": 1, "m": 1, "nodes": [], "edges": []})"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"schema": 1, "k": 2, "m": 1, "nodes": [{"id": 0, "weight": 1}], "edges": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"schema": 1, "k": 1, "m": 1, "nodes": [{"id": 1, "weight": 1}], "edges": []})"),
                  ParseError);
}

TEST_CASE("node lists") {
  CHECK(parse_node_list("[0, 2]", 3) == NodeSet(3, {0, 2}));
  CHECK(parse_node_list(R"({"solution": [1]})", 3) == NodeSet(3, {1}));
  CHECK(parse_node_list(R"({"nodes": [2, 0]})", 3) == NodeSet(3, {0, 2}));
  CHECK_THROWS_AS(parse_node_list("[3]", 3), ParseError);
  CHECK_THROWS_AS(parse_node_list(R"({"set": []})", 3), ParseError);
}

TEST_CASE("report layout") {
  Instance in;
  for (std::uint64_t seed = 1; !precheck(in = gen_unit_disk(14, 0.5, {1, 9}, seed, 2, 2)).ok; ++seed) {
  }
  SolverConfig config;
  config.variant = Variant::kUnitDisk;
  const Json doc = report_to_json(solve(in, config), false);
  for (const char* key : {"schema", "variant", "k", "m", "config", "stages", "solution", "weights", "guarantee",
                          "certificate"})
    CHECK(doc.contains(key));
  CHECK_FALSE(doc.contains("timings_ms"));
  CHECK(report_to_json(solve(in, config), true).contains("timings_ms"));
  CHECK(doc["variant"] == "unit-disk");
  CHECK(doc["certificate"]["feasible"] == true);
  CHECK(parse_node_list(doc.dump(), in.node_count()).size() == static_cast<int>(doc["solution"].size()));
}

TEST_CASE("generators") {
  CHECK(gen_unit_disk(10, 0.3, {1, 5}, 42) == gen_unit_disk(10, 0.3, {1, 5}, 42));
  CHECK_FALSE(gen_unit_disk(10, 0.3, {1, 5}, 42) == gen_unit_disk(10, 0.3, {1, 5}, 43));
  CHECK(gen_unit_disk(9, 2.0, {1, 1}, 1).graph == complete(9));
  CHECK(gen_unit_disk(9, 0.0, {1, 1}, 1).graph.edge_count() == 0);
  CHECK(gen_gnp(8, 1.0, {1, 1}, 1).graph == complete(8));
  CHECK(gen_gnp(8, 0.0, {1, 1}, 1).graph.edge_count() == 0);
  CHECK(gen_gnp(15, 0.5, {0, 100}, 9) == gen_gnp(15, 0.5, {0, 100}, 9));
  const Instance w = gen_gnp(30, 0.5, {3, 7}, 2);
  for (Weight x : w.weights) {
    CHECK(x >= 3);
    CHECK(x <= 7);
  }
  CHECK_THROWS_AS(gen_gnp(5, 1.5, {1, 1}, 1), std::invalid_argument);
}

TEST_CASE("bench rows") {
  BenchGrid grid;
  grid.graph = "unit-disk";
  grid.sizes = {10};
  grid.ks = {1, 2};
  grid.m_offsets = {0, 1};
  grid.variants = {Variant::kGeneral, Variant::kUnitDisk, Variant::kGuessRoot};
  grid.per_cell = 2;
  grid.radius = 0.6;
  grid.threads = 2;
  const auto rows = run_bench(grid);
  REQUIRE_FALSE(rows.empty());
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].instance_id <= rows[i].instance_id);
  for (const auto& r : rows) {
    CHECK(r.ratio.has_value() == r.oracle.has_value());
    if (r.ratio) CHECK(*r.ratio >= 1.0);
    if (r.variant == "guess-root") CHECK(r.k == 2);
  }
  const std::string csv = bench_csv(rows);
  CHECK(csv.rfind("instance,n,edges,k,m,variant,alg_weight,oracle_weight,ratio", 0) == 0);
  CHECK(bench_json(rows).size() == rows.size());

  grid.threads = 1;
  const auto again = run_bench(grid);
  REQUIRE(again.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(again[i].instance_id == rows[i].instance_id);
    CHECK(again[i].alg == rows[i].alg);
  }
}
