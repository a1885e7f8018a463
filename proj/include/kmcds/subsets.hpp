#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kmcds/graph.hpp"

namespace kmcds {

/// Lexicographic order of the sorted member lists of two bitmask subsets,
/// e.g. {0} < {0,1} < {0,2} < {1}.
bool subset_lex_less(std::uint32_t a, std::uint32_t b);

/// Every subset of `weights.size()` items (at most 24), ordered by total
/// weight and then by subset_lex_less.
std::vector<std::uint32_t> subsets_by_weight(std::span<const Weight> weights);

/// Bitmask over local positions -> NodeSet over `universe`.
NodeSet mask_to_set(std::uint32_t mask, std::span<const NodeId> positions, int universe);

}  // namespace kmcds
