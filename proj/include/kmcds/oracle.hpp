#pragma once

#include <cstdint>
#include <optional>

#include "kmcds/graph.hpp"

namespace kmcds {

struct OracleResult {
  std::optional<NodeSet> optimum;  // empty when no (k, m)-cds exists
  Weight weight = 0;
  std::uint64_t examined = 0;      // subsets fully or partially tested
  double elapsed_ms = 0;
};

/// Minimum-weight (k, m)-cds: subsets in nondecreasing weight order (ties
/// lexicographic), cheap filters before the connectivity test, first
/// feasible subset wins. Throws std::invalid_argument for n > 16.
OracleResult opt_kmcds(const Instance& instance);

/// Same answer from full verification of every subset; n <= 16 as well,
/// intended for n <= 8 cross-checks.
OracleResult opt_kmcds_unpruned(const Instance& instance);

}  // namespace kmcds
