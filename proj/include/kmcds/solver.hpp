#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kmcds/connectivity.hpp"
#include "kmcds/errors.hpp"
#include "kmcds/graph.hpp"
#include "kmcds/pair_augment.hpp"
#include "kmcds/rooted_conn.hpp"

namespace kmcds {

enum class Variant { kGeneral, kUnitDisk, kGuessRoot };
enum class RootRule { kMinWeight, kEnumerate };

const char* variant_name(Variant variant);
const char* root_rule_name(RootRule rule);
Variant parse_variant(const std::string& text);
RootedBackend parse_backend(const std::string& text);
RootRule parse_root_rule(const std::string& text);

struct SolverConfig {
  Variant variant = Variant::kGeneral;
  RootedBackend backend = RootedBackend::kFlowUnion;
  RootRule root_rule = RootRule::kMinWeight;
  bool prune = true;
  std::uint64_t seed = 0;  // echoed in reports; the solver itself draws no randomness
  int enumerate_max_terminals = 12;
  long guess_candidate_cap = 0;  // 0: enumerate every (root, k neighbours) guess
  bool witnesses = true;
};

struct PrecheckResult {
  bool ok = false;
  std::optional<ConnectivityFailure> witness;
};

/// A (k, m)-cds with m >= k exists iff G is k-connected.
PrecheckResult precheck(const Instance& instance);

class InfeasibleInstance : public InfeasibleError {
 public:
  explicit InfeasibleInstance(PrecheckResult result);
  const PrecheckResult& result() const { return result_; }

 private:
  PrecheckResult result_;
};

struct StageTimes {
  double dominating_ms = 0;
  double rooted_ms = 0;
  double forest_ms = 0;
  double pairs_ms = 0;
  double prune_ms = 0;
  double certify_ms = 0;
};

struct SolutionReport {
  Variant variant = Variant::kGeneral;
  SolverConfig config;
  int k = 0;
  int m = 0;

  NodeSet terminals;   // T
  NodeSet steiner;     // S
  NodeSet pair_nodes;  // P
  NodeSet attachment;  // R
  AugmentingForest forest;  // J
  std::optional<NodeId> guessed_root;
  bool fallback = false;

  NodeSet pruned;
  NodeSet solution;
  Weight weight_terminals = 0;
  Weight weight_steiner = 0;
  Weight weight_pairs = 0;
  Weight weight_pruned = 0;
  Weight total = 0;

  double dominating_bound = 0;  // ln(Δ + m) + 1
  GuaranteeInfo rooted;
  int forest_term = 0;          // 2(k - 1), or 0 when steps 4-5 are skipped
  double ratio_bound = 0;
  std::string ratio_expression;

  std::optional<ConversionCheck> conversion;
  long guess_candidates = 0;
  Certificate certificate;
  StageTimes times;
};

/// Throws InfeasibleInstance when the precheck fails.
SolutionReport solve_general(const Instance& instance, const SolverConfig& config);

/// Step 3 runs on edge costs c_uv = w_u + w_v. Throws std::invalid_argument
/// without coordinates.
SolutionReport solve_unit_disk(const Instance& instance, const SolverConfig& config);

/// k in {2, 3}: enumerate a real root and k of its edges, solve step 3 with
/// that root and skip the augmentation steps.
SolutionReport solve_guess_root(const Instance& instance, const SolverConfig& config);

SolutionReport solve(const Instance& instance, const SolverConfig& config);

/// Inclusion pruning of a (k, m)-cds: repeatedly drop the heaviest node whose
/// removal keeps the set feasible.
NodeSet prune_solution(const Instance& instance, NodeSet solution);

bool is_kmcds(const Instance& instance, const NodeSet& set);

}  // namespace kmcds
