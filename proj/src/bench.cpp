#include "kmcds/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "kmcds/oracle.hpp"

namespace kmcds {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("KMCDS_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct Job {
  std::string id;
  int n;
  int k;
  int m;
  std::uint64_t seed;
};

bool applies(Variant variant, const BenchGrid& grid, int k) {
  if (variant == Variant::kUnitDisk && grid.graph != "unit-disk") return false;
  if (variant == Variant::kGuessRoot && k != 2 && k != 3) return false;
  return true;
}

std::optional<Instance> draw(const BenchGrid& grid, const Job& job) {
  for (int attempt = 0; attempt < grid.max_attempts; ++attempt) {
    const std::uint64_t seed = derive_seed(job.seed, static_cast<std::uint64_t>(attempt));
    Instance instance = grid.graph == "unit-disk"
                            ? gen_unit_disk(job.n, grid.radius, grid.weights, seed, job.k, job.m)
                            : gen_gnp(job.n, grid.p, grid.weights, seed, job.k, job.m);
    if (precheck(instance).ok) return instance;
  }
  return std::nullopt;
}

std::vector<BenchRow> run_job(const BenchGrid& grid, const Job& job) {
  std::vector<BenchRow> rows;
  const std::optional<Instance> instance = draw(grid, job);
  if (!instance) return rows;
  std::optional<OracleResult> oracle;
  if (job.n <= grid.oracle_max_n && job.n <= 16) oracle = opt_kmcds(*instance);

  for (Variant variant : grid.variants) {
    if (!applies(variant, grid, job.k)) continue;
    SolverConfig config = grid.base;
    config.variant = variant;
    config.witnesses = false;
    const auto start = std::chrono::steady_clock::now();
    const SolutionReport report = solve(*instance, config);
    BenchRow row;
    row.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    row.instance_id = job.id;
    row.n = job.n;
    row.edges = instance->graph.edge_count();
    row.k = job.k;
    row.m = job.m;
    row.variant = variant_name(variant);
    row.alg = report.total;
    row.weight_terminals = report.weight_terminals;
    row.weight_steiner = report.weight_steiner;
    row.weight_pairs = report.weight_pairs;
    if (oracle && oracle->optimum) {
      row.oracle = oracle->weight;
      if (oracle->weight > 0)
        row.ratio = static_cast<double>(report.total) / static_cast<double>(oracle->weight);
      else
        row.ratio = report.total == 0 ? 1.0 : std::numeric_limits<double>::infinity();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchGrid& grid) {
  std::vector<Job> jobs;
  std::uint64_t counter = 0;
  for (int n : grid.sizes)
    for (int k : grid.ks)
      for (int offset : grid.m_offsets)
        for (int i = 0; i < grid.per_cell; ++i) {
          std::ostringstream id;
          id << grid.graph << "-n" << n << "-k" << k << "-m" << (k + offset) << "-" << i;
          jobs.push_back({id.str(), n, k, k + offset, derive_seed(grid.seed, counter++)});
        }

  std::vector<std::vector<BenchRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(grid, jobs[i]);
  };
  const int threads = std::min<int>(resolve_threads(grid.threads), static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<BenchRow> rows;
  for (auto& chunk : results)
    for (auto& row : chunk) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) { return a.instance_id < b.instance_id; });
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "instance,n,edges,k,m,variant,alg_weight,oracle_weight,ratio,w_T,w_S,w_P,elapsed_ms\n";
  for (const auto& r : rows) {
    out << r.instance_id << ',' << r.n << ',' << r.edges << ',' << r.k << ',' << r.m << ',' << r.variant << ','
        << r.alg << ',';
    if (r.oracle) out << *r.oracle;
    out << ',';
    if (r.ratio) out << *r.ratio;
    out << ',' << r.weight_terminals << ',' << r.weight_steiner << ',' << r.weight_pairs << ',' << r.elapsed_ms
        << '\n';
  }
  return out.str();
}

Json bench_json(const std::vector<BenchRow>& rows) {
  Json doc = Json::array();
  for (const auto& r : rows) {
    doc.push_back({{"instance", r.instance_id},
                   {"n", r.n},
                   {"edges", r.edges},
                   {"k", r.k},
                   {"m", r.m},
                   {"variant", r.variant},
                   {"alg_weight", r.alg},
                   {"oracle_weight", r.oracle ? Json(*r.oracle) : Json(nullptr)},
                   {"ratio", r.ratio ? Json(*r.ratio) : Json(nullptr)},
                   {"w_T", r.weight_terminals},
                   {"w_S", r.weight_steiner},
                   {"w_P", r.weight_pairs},
                   {"elapsed_ms", r.elapsed_ms}});
  }
  return doc;
}

}  // namespace kmcds
