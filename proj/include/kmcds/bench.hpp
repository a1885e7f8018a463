#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmcds/generators.hpp"
#include "kmcds/io.hpp"
#include "kmcds/solver.hpp"

namespace kmcds {

struct BenchRow {
  std::string instance_id;
  int n = 0;
  std::size_t edges = 0;
  int k = 0;
  int m = 0;
  std::string variant;
  Weight alg = 0;
  std::optional<Weight> oracle;
  std::optional<double> ratio;  // present iff the oracle ran; >= 1
  Weight weight_terminals = 0;
  Weight weight_steiner = 0;
  Weight weight_pairs = 0;
  double elapsed_ms = 0;
};

struct BenchGrid {
  std::string graph = "gnp";  // gnp | unit-disk
  std::vector<int> sizes{12};
  std::vector<int> ks{1, 2};
  std::vector<int> m_offsets{0, 1};
  std::vector<Variant> variants{Variant::kGeneral};
  int per_cell = 3;
  double p = 0.5;
  double radius = 0.45;
  WeightRange weights{1, 10};
  std::uint64_t seed = 1;
  int oracle_max_n = 14;
  int max_attempts = 50;  // regenerations per instance until the graph is k-connected
  int threads = 0;        // 0: KMCDS_THREADS or the hardware concurrency
  SolverConfig base;
};

/// Runs every (n, k, m, instance, variant) cell. Variants that do not apply
/// (unit-disk on G(n,p), guess-root for k outside {2, 3}) are skipped, as are
/// instances that stay infeasible after `max_attempts` draws. Rows come back
/// ordered by instance id, then variant.
std::vector<BenchRow> run_bench(const BenchGrid& grid);

std::string bench_csv(const std::vector<BenchRow>& rows);
Json bench_json(const std::vector<BenchRow>& rows);

/// Worker count: `requested` if positive, else KMCDS_THREADS, else the
/// hardware concurrency.
int resolve_threads(int requested);

}  // namespace kmcds
