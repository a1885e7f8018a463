// kmcds: generate, solve, verify and benchmark k-connected m-dominating set
// instances.
//
// Exit status: 0 success, 1 error (bad flags, unreadable or malformed file),
// 2 infeasible instance (graph not k-connected), 3 verification failed.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kmcds/bench.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/generators.hpp"
#include "kmcds/io.hpp"
#include "kmcds/oracle.hpp"
#include "kmcds/solver.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFailed = 3;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    kmcds::write_file(path, text);
  }
}

kmcds::Instance load(const std::string& path) {
  return kmcds::parse_instance(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {})
                                           : kmcds::read_file(path));
}

void print_infeasible(const kmcds::InfeasibleInstance& e) {
  std::cerr << "infeasible: " << e.what() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate minimum-weight k-connected m-dominating sets (m >= k)"};
  app.require_subcommand(1);
  app.footer("Exit status: 0 ok, 1 error, 2 infeasible instance, 3 verification failed.\n"
             "KMCDS_THREADS overrides the worker count of `bench`.");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string gen_graph = "unit-disk";
  int gen_n = 20, gen_k = 1, gen_m = 1, gen_attempts = 1;
  double gen_p = 0.3, gen_radius = 0.35;
  kmcds::Weight gen_wmin = 1, gen_wmax = 10;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--graph", gen_graph, "gnp | unit-disk")->check(CLI::IsMember({"gnp", "unit-disk"}));
  gen->add_option("-n,--nodes", gen_n, "Node count")->check(CLI::PositiveNumber);
  gen->add_option("-p,--prob", gen_p, "Edge probability for gnp");
  gen->add_option("-r,--radius", gen_radius, "Disk radius for unit-disk (unit square)");
  gen->add_option("--wmin", gen_wmin, "Smallest node weight");
  gen->add_option("--wmax", gen_wmax, "Largest node weight");
  gen->add_option("-k", gen_k, "Connectivity k")->check(CLI::PositiveNumber);
  gen->add_option("-m", gen_m, "Domination m (>= k)");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--attempts", gen_attempts,
                  "Redraw with derived seeds up to this many times until the graph is k-connected");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run the approximation pipeline on an instance file");
  std::string solve_in, solve_out, variant = "general", backend = "flow-union", r_rule = "min-weight";
  bool no_prune = false, no_witnesses = false, timings = false;
  std::uint64_t solve_seed = 0;
  long guess_cap = 0;
  solve->add_option("instance", solve_in, "Instance file ('-' for stdin)")->required();
  solve->add_option("--variant", variant, "general | unit-disk | guess-root")
      ->check(CLI::IsMember({"general", "unit-disk", "guess-root"}));
  solve->add_option("--backend", backend, "Rooted connectivity backend: flow-union | exact")
      ->check(CLI::IsMember({"flow-union", "exact"}));
  solve->add_option("--r-rule", r_rule, "Root attachment choice: min-weight | enumerate")
      ->check(CLI::IsMember({"min-weight", "enumerate"}));
  solve->add_flag("--no-prune", no_prune, "Skip inclusion pruning (plain pipeline output)");
  solve->add_flag("--no-witnesses", no_witnesses, "Omit per-pair path witnesses from the certificate");
  solve->add_flag("--timings", timings, "Add per-stage wall times (makes output run-dependent)");
  solve->add_option("--seed", solve_seed, "Seed echoed into the report");
  solve->add_option("--guess-cap", guess_cap, "Cap on guessed (root, edges) candidates, 0 = all");
  solve->add_option("-o,--output", solve_out, "Report file (default stdout)");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 16)");
  std::string oracle_in, oracle_out;
  bool oracle_timings = false;
  oracle->add_option("instance", oracle_in, "Instance file")->required();
  oracle->add_flag("--timings", oracle_timings, "Include elapsed time");
  oracle->add_option("-o,--output", oracle_out, "Output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check a node set against an instance");
  std::string verify_in, verify_set;
  bool verify_witnesses = false;
  verify->add_option("instance", verify_in, "Instance file")->required();
  verify->add_option("solution", verify_set,
                     "Node list: JSON array, a solve/oracle report, or {\"nodes\": [...]}")
      ->required();
  verify->add_flag("--witnesses", verify_witnesses, "Print per-pair path witnesses");

  // bench
  auto* bench = app.add_subcommand("bench", "Sweep a grid of generated instances");
  kmcds::BenchGrid grid;
  std::vector<std::string> bench_variants{"general"};
  std::string csv_out, json_out;
  bench->add_option("--graph", grid.graph, "gnp | unit-disk")->check(CLI::IsMember({"gnp", "unit-disk"}));
  bench->add_option("--sizes", grid.sizes, "Node counts")->delimiter(',');
  bench->add_option("--ks", grid.ks, "Values of k")->delimiter(',');
  bench->add_option("--m-offsets", grid.m_offsets, "Values of m - k")->delimiter(',');
  bench->add_option("--variants", bench_variants, "general,unit-disk,guess-root")->delimiter(',');
  bench->add_option("--per-cell", grid.per_cell, "Instances per (n, k, m) cell");
  bench->add_option("-p,--prob", grid.p, "Edge probability for gnp");
  bench->add_option("-r,--radius", grid.radius, "Disk radius for unit-disk");
  bench->add_option("--wmin", grid.weights.min, "Smallest node weight");
  bench->add_option("--wmax", grid.weights.max, "Largest node weight");
  bench->add_option("--seed", grid.seed, "Base seed");
  bench->add_option("--oracle-max-n", grid.oracle_max_n, "Run the exact oracle up to this n (max 16)");
  bench->add_option("--threads", grid.threads, "Workers (default KMCDS_THREADS or all cores)");
  bench->add_option("--backend", backend, "flow-union | exact")->check(CLI::IsMember({"flow-union", "exact"}));
  bench->add_option("--r-rule", r_rule, "min-weight | enumerate")->check(CLI::IsMember({"min-weight", "enumerate"}));
  bench->add_flag("--no-prune", no_prune, "Skip inclusion pruning");
  bench->add_option("--csv", csv_out, "CSV output file (default stdout)");
  bench->add_option("--json", json_out, "JSON output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      kmcds::Instance instance;
      for (int attempt = 0; attempt < std::max(gen_attempts, 1); ++attempt) {
        const std::uint64_t seed = attempt == 0 ? gen_seed : kmcds::derive_seed(gen_seed, attempt);
        instance = gen_graph == "gnp"
                       ? kmcds::gen_gnp(gen_n, gen_p, {gen_wmin, gen_wmax}, seed, gen_k, gen_m)
                       : kmcds::gen_unit_disk(gen_n, gen_radius, {gen_wmin, gen_wmax}, seed, gen_k, gen_m);
        if (gen_attempts <= 1 || kmcds::precheck(instance).ok) break;
      }
      emit(gen_out, kmcds::serialize_instance(instance));
      return 0;
    }

    if (*solve) {
      const kmcds::Instance instance = load(solve_in);
      kmcds::SolverConfig config;
      config.variant = kmcds::parse_variant(variant);
      config.backend = kmcds::parse_backend(backend);
      config.root_rule = kmcds::parse_root_rule(r_rule);
      config.prune = !no_prune;
      config.seed = solve_seed;
      config.guess_candidate_cap = guess_cap;
      config.witnesses = !no_witnesses;
      const kmcds::SolutionReport report = kmcds::solve(instance, config);
      emit(solve_out, kmcds::report_to_json(report, timings).dump(2) + "\n");
      return 0;
    }

    if (*oracle) {
      const kmcds::Instance instance = load(oracle_in);
      const kmcds::OracleResult result = kmcds::opt_kmcds(instance);
      emit(oracle_out, kmcds::oracle_to_json(result, oracle_timings).dump(2) + "\n");
      return result.optimum ? 0 : kExitInfeasible;
    }

    if (*verify) {
      const kmcds::Instance instance = load(verify_in);
      const kmcds::NodeSet set = kmcds::parse_node_list(kmcds::read_file(verify_set), instance.node_count());
      const kmcds::Certificate cert =
          kmcds::certify(instance.graph, set, instance.k, instance.m, verify_witnesses);
      kmcds::Json doc = kmcds::certificate_to_json(cert, set);
      doc["weight"] = kmcds::total_weight(instance.weights, set);
      std::cout << doc.dump(2) << "\n";
      std::cerr << (cert.feasible() ? "PASS" : "FAIL") << "\n";
      return cert.feasible() ? 0 : kExitVerifyFailed;
    }

    if (*bench) {
      grid.variants.clear();
      for (const auto& v : bench_variants) grid.variants.push_back(kmcds::parse_variant(v));
      grid.base.backend = kmcds::parse_backend(backend);
      grid.base.root_rule = kmcds::parse_root_rule(r_rule);
      grid.base.prune = !no_prune;
      const auto rows = kmcds::run_bench(grid);
      emit(csv_out, kmcds::bench_csv(rows));
      if (!json_out.empty()) kmcds::write_file(json_out, kmcds::bench_json(rows).dump(2) + "\n");
      return 0;
    }
  } catch (const kmcds::InfeasibleInstance& e) {
    print_infeasible(e);
    return kExitInfeasible;
  } catch (const kmcds::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
