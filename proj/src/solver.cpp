#include "kmcds/solver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "kmcds/dominating_set.hpp"

namespace kmcds {

const char* variant_name(Variant variant) {
  switch (variant) {
    case Variant::kGeneral: return "general";
    case Variant::kUnitDisk: return "unit-disk";
    case Variant::kGuessRoot: return "guess-root";
  }
  return "general";
}

const char* root_rule_name(RootRule rule) {
  return rule == RootRule::kEnumerate ? "enumerate" : "min-weight";
}

Variant parse_variant(const std::string& text) {
  if (text == "general") return Variant::kGeneral;
  if (text == "unit-disk") return Variant::kUnitDisk;
  if (text == "guess-root") return Variant::kGuessRoot;
  throw std::invalid_argument("unknown variant '" + text + "'");
}

RootedBackend parse_backend(const std::string& text) {
  if (text == "flow-union") return RootedBackend::kFlowUnion;
  if (text == "exact") return RootedBackend::kExact;
  throw std::invalid_argument("unknown backend '" + text + "'");
}

RootRule parse_root_rule(const std::string& text) {
  if (text == "min-weight") return RootRule::kMinWeight;
  if (text == "enumerate") return RootRule::kEnumerate;
  throw std::invalid_argument("unknown R-rule '" + text + "'");
}

PrecheckResult precheck(const Instance& instance) {
  PrecheckResult result;
  result.witness = find_connectivity_failure(instance.graph, instance.k);
  result.ok = !result.witness.has_value();
  return result;
}

namespace {

std::string describe(const PrecheckResult& result) {
  std::ostringstream out;
  out << "instance graph is not k-connected";
  if (result.witness) {
    const auto& w = *result.witness;
    if (w.u < 0) {
      out << ": too few nodes";
    } else {
      out << ": nodes " << w.u << " and " << w.v << " have " << w.connectivity
          << " disjoint paths; separator {";
      for (std::size_t i = 0; i < w.separator.size(); ++i) out << (i ? "," : "") << w.separator[i];
      out << "}";
    }
  }
  return out.str();
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Cheapest nodes outside `set` (ties by index) until it has `target` members.
void pad_to(NodeSet& set, std::span<const Weight> weights, int target) {
  std::vector<NodeId> outside = set.complement().members();
  std::stable_sort(outside.begin(), outside.end(),
                   [&](NodeId a, NodeId b) { return weights[a] < weights[b]; });
  for (NodeId v : outside) {
    if (set.size() >= target) break;
    set.insert(v);
  }
}

NodeSet lightest(const NodeSet& set, std::span<const Weight> weights, int count) {
  std::vector<NodeId> members = set.members();
  std::stable_sort(members.begin(), members.end(),
                   [&](NodeId a, NodeId b) { return weights[a] < weights[b]; });
  members.resize(static_cast<std::size_t>(count));
  return NodeSet(set.universe(), members);
}

/// Visits every `count`-subset of `items` in lexicographic order; stops when
/// `visit` returns false.
template <typename Visit>
void for_each_combination(const std::vector<NodeId>& items, int count, Visit&& visit) {
  const int size = static_cast<int>(items.size());
  if (count > size) return;
  std::vector<int> idx(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) idx[i] = i;
  std::vector<NodeId> chosen(static_cast<std::size_t>(count));
  while (true) {
    for (int i = 0; i < count; ++i) chosen[i] = items[idx[i]];
    if (!visit(chosen)) return;
    int i = count - 1;
    while (i >= 0 && idx[i] == size - count + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
  }
}

void require_feasible(const Instance& instance) {
  PrecheckResult check = precheck(instance);
  if (!check.ok) throw InfeasibleInstance(std::move(check));
}

NodeSet step_one(const Instance& instance) {
  NodeSet terminals = greedy_mds(instance);
  if (terminals.size() < instance.k) pad_to(terminals, instance.weights, instance.k);
  return terminals;
}

void fill_bounds(SolutionReport& report, const Instance& instance, bool with_forest) {
  const DegreeStats stats = degree_stats(instance.graph);
  report.dominating_bound = multicover_bound(stats.max_degree, instance.m);
  report.forest_term = with_forest ? 2 * (instance.k - 1) : 0;
  report.ratio_bound = report.dominating_bound + report.rooted.value + report.forest_term;
  report.ratio_expression = "ln(Delta+m)+1 + " + report.rooted.expression +
                            (with_forest ? " + 2(k-1)" : "");
}

/// Pruning, weight bookkeeping and the independent certificate.
void finish(SolutionReport& report, const Instance& instance, const SolverConfig& config) {
  const auto& w = instance.weights;
  NodeSet assembled = report.terminals.united(report.steiner).united(report.pair_nodes);
  auto start = Clock::now();
  report.solution = config.prune ? prune_solution(instance, assembled) : assembled;
  report.times.prune_ms = elapsed_ms(start);
  report.pruned = assembled.minus(report.solution);

  report.weight_terminals = total_weight(w, report.terminals);
  report.weight_steiner = total_weight(w, report.steiner);
  report.weight_pairs = total_weight(w, report.pair_nodes);
  report.weight_pruned = total_weight(w, report.pruned);
  report.total = total_weight(w, report.solution);

  start = Clock::now();
  report.certificate = certify(instance.graph, report.solution, instance.k, instance.m, config.witnesses);
  report.times.certify_ms = elapsed_ms(start);
  if (!report.certificate.feasible())
    throw std::logic_error("solver produced a set that fails verification");
}

/// Steps 2-5 for a fixed T and R.
SolutionReport run_pipeline(const Instance& instance, const SolverConfig& config, const NodeSet& terminals,
                            const NodeSet& attachment, bool edge_costs) {
  const int n = instance.node_count();
  const int k = instance.k;
  SolutionReport report;
  report.variant = config.variant;
  report.config = config;
  report.k = k;
  report.m = instance.m;
  report.terminals = terminals;
  report.attachment = attachment;

  auto start = Clock::now();
  const RootedProblem problem = make_rooted_problem(instance, terminals, attachment);
  RootedSolution step3;
  if (edge_costs) {
    std::vector<Weight> effective = problem.weights;
    for (NodeId v : problem.fixed.members()) effective[v] = 0;
    const std::vector<Weight> costs = conversion_edge_costs(problem.graph, effective);
    step3 = solve_rooted_edgecost(problem, costs, config.backend, config.prune);
    NodeSet touched(problem.graph.node_count());
    for (auto [u, v] : step3.edges) {
      touched.insert(u);
      touched.insert(v);
    }
    report.conversion = check_conversion_inequality(effective, touched, step3.edges);
  } else {
    step3 = solve_rooted_nodeweight(problem, config.backend, config.prune);
  }
  report.steiner = step3.selected.resized(n);  // the root is fixed, never selected
  report.rooted = step3.guarantee;
  // H must have more than k nodes before it can be made k-connected.
  NodeSet body = terminals.united(report.steiner);
  if (body.size() <= k) {
    pad_to(body, instance.weights, k + 1);
    report.steiner = body.minus(terminals);
  }
  report.times.rooted_ms = elapsed_ms(start);

  start = Clock::now();
  const Subgraph h = induced_subgraph(instance.graph, body);
  const AugmentingForest local = minimal_augmenting_forest(h.graph, h.lower(attachment), k);
  for (auto [u, v] : local.edges) report.forest.edges.emplace_back(h.to_original[u], h.to_original[v]);
  report.times.forest_ms = elapsed_ms(start);

  start = Clock::now();
  NodeSet free = body;
  report.pair_nodes = NodeSet(n);
  for (auto [u, v] : report.forest.edges) {
    const PairPaths paths = min_weight_k_paths(instance.graph, instance.weights, free, u, v, k);
    free.insert_all(paths.added);
    report.pair_nodes.insert_all(paths.added);
  }
  report.times.pairs_ms = elapsed_ms(start);

  fill_bounds(report, instance, true);
  finish(report, instance, config);
  return report;
}

SolutionReport solve_pipeline(const Instance& instance, const SolverConfig& config, bool edge_costs) {
  require_feasible(instance);
  auto start = Clock::now();
  const NodeSet terminals = step_one(instance);
  const double dominating_ms = elapsed_ms(start);

  std::optional<SolutionReport> best;
  auto consider = [&](SolutionReport candidate) {
    if (!best || candidate.total < best->total) best = std::move(candidate);
  };
  if (config.root_rule == RootRule::kEnumerate && terminals.size() <= config.enumerate_max_terminals) {
    for_each_combination(terminals.members(), instance.k, [&](const std::vector<NodeId>& chosen) {
      consider(run_pipeline(instance, config, terminals, NodeSet(instance.node_count(), chosen), edge_costs));
      return true;
    });
  } else {
    consider(run_pipeline(instance, config, terminals, lightest(terminals, instance.weights, instance.k),
                          edge_costs));
  }
  best->times.dominating_ms = dominating_ms;
  return std::move(*best);
}

}  // namespace

InfeasibleInstance::InfeasibleInstance(PrecheckResult result)
    : InfeasibleError(describe(result)), result_(std::move(result)) {}

bool is_kmcds(const Instance& instance, const NodeSet& set) {
  if (!is_m_dominating(instance.graph, set, instance.m).ok) return false;
  return is_k_connected(induced_subgraph(instance.graph, set).graph, instance.k);
}

NodeSet prune_solution(const Instance& instance, NodeSet solution) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<NodeId> order = solution.members();
    std::stable_sort(order.begin(), order.end(),
                     [&](NodeId a, NodeId b) { return instance.weights[a] > instance.weights[b]; });
    for (NodeId v : order) {
      solution.erase(v);
      if (is_kmcds(instance, solution)) {
        changed = true;
      } else {
        solution.insert(v);
      }
    }
  }
  return solution;
}

SolutionReport solve_general(const Instance& instance, const SolverConfig& config) {
  SolverConfig effective = config;
  effective.variant = Variant::kGeneral;
  return solve_pipeline(instance, effective, false);
}

SolutionReport solve_unit_disk(const Instance& instance, const SolverConfig& config) {
  if (!instance.geometry) throw std::invalid_argument("unit-disk variant needs node coordinates and a radius");
  SolverConfig effective = config;
  effective.variant = Variant::kUnitDisk;
  return solve_pipeline(instance, effective, true);
}

SolutionReport solve_guess_root(const Instance& instance, const SolverConfig& config) {
  const int k = instance.k;
  if (k != 2 && k != 3) throw std::invalid_argument("guess-root variant needs k in {2, 3}");
  require_feasible(instance);
  const Graph& g = instance.graph;
  const int n = g.node_count();
  const auto& w = instance.weights;

  auto start = Clock::now();
  const NodeSet terminals = step_one(instance);
  const double dominating_ms = elapsed_ms(start);

  struct Best {
    NodeId root;
    NodeSet attachment;
    NodeSet steiner;
    Weight weight;
  };
  std::optional<Best> best;
  long candidates = 0;
  bool capped = false;

  std::vector<NodeId> roots(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) roots[v] = v;
  std::stable_sort(roots.begin(), roots.end(), [&](NodeId a, NodeId b) { return w[a] < w[b]; });

  start = Clock::now();
  for (NodeId root : roots) {
    if (capped) break;
    const std::vector<NodeId> around(g.adjacent(root).begin(), g.adjacent(root).end());
    for_each_combination(around, k, [&](const std::vector<NodeId>& chosen) {
      if (config.guess_candidate_cap > 0 && candidates >= config.guess_candidate_cap) {
        capped = true;
        return false;
      }
      NodeSet fixed = terminals;
      fixed.insert(root);
      for (NodeId v : chosen) fixed.insert(v);
      if (best && total_weight(w, fixed) >= best->weight) return true;
      ++candidates;

      std::vector<Edge> dropped;
      for (NodeId v : around)
        if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) dropped.emplace_back(root, v);
      RootedProblem problem;
      problem.graph = g.without_edges(dropped);
      problem.root = root;
      problem.fixed = fixed;
      problem.terminals = fixed;
      problem.terminals.erase(root);
      problem.weights = w;
      problem.k = k;

      // Grow the terminal set until every present node reaches the root k
      // times; with exactly k root edges that makes H_r k-connected.
      NodeSet selected(n);
      try {
        while (true) {
          selected = config.backend == RootedBackend::kExact ? exact_backend(problem)
                                                             : flow_union_backend(problem);
          if (config.prune) selected = prune_selection(problem, selected);
          const NodeSet present = fixed.united(selected);
          const Subgraph h = induced_subgraph(problem.graph, present);
          bool grew = false;
          for (NodeId v : present.members()) {
            if (v == root || problem.terminals.contains(v)) continue;
            if (local_connectivity(h.graph, h.to_local[v], h.to_local[root], k) < k) {
              problem.terminals.insert(v);
              problem.fixed.insert(v);
              grew = true;
            }
          }
          if (!grew) break;
        }
      } catch (const InfeasibleError&) {
        return true;
      }
      const NodeSet present = problem.fixed.united(selected);
      const Weight weight = total_weight(w, present);
      if (best && weight >= best->weight) return true;
      if (!is_k_connected(induced_subgraph(g, present).graph, k)) return true;
      best = Best{root, NodeSet(n, chosen), present.minus(terminals), weight};
      return true;
    });
  }
  const double rooted_ms = elapsed_ms(start);

  if (!best) {
    SolutionReport report = solve_general(instance, config);
    report.variant = Variant::kGuessRoot;
    report.config.variant = Variant::kGuessRoot;
    report.fallback = true;
    report.guess_candidates = candidates;
    return report;
  }

  SolutionReport report;
  report.variant = Variant::kGuessRoot;
  report.config = config;
  report.config.variant = Variant::kGuessRoot;
  report.k = k;
  report.m = instance.m;
  report.terminals = terminals;
  report.steiner = best->steiner;
  report.pair_nodes = NodeSet(n);
  report.attachment = best->attachment;
  report.guessed_root = best->root;
  report.guess_candidates = candidates;
  report.rooted = backend_guarantee(config.backend, terminals.size(), false);
  report.times.dominating_ms = dominating_ms;
  report.times.rooted_ms = rooted_ms;
  fill_bounds(report, instance, false);
  finish(report, instance, config);
  return report;
}

SolutionReport solve(const Instance& instance, const SolverConfig& config) {
  switch (config.variant) {
    case Variant::kGeneral: return solve_general(instance, config);
    case Variant::kUnitDisk: return solve_unit_disk(instance, config);
    case Variant::kGuessRoot: return solve_guess_root(instance, config);
  }
  return solve_general(instance, config);
}

}  // namespace kmcds
