#include "kmcds/subsets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace kmcds {

bool subset_lex_less(std::uint32_t a, std::uint32_t b) {
  if (a == b) return false;
  const int first = std::countr_zero(a ^ b);
  // Both lists agree below `first`; the one lacking it is smaller only if it
  // has nothing left (it is then a proper prefix).
  if (a >> first & 1u) return (b >> first) != 0;
  return (a >> first) == 0;
}

std::vector<std::uint32_t> subsets_by_weight(std::span<const Weight> weights) {
  const std::size_t n = weights.size();
  if (n > 24) throw std::invalid_argument("subsets_by_weight: more than 24 items");
  const std::uint32_t count = 1u << n;
  std::vector<Weight> total(count, 0);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    total[mask] = total[mask & (mask - 1)] + weights[static_cast<std::size_t>(low)];
  }
  std::vector<std::uint32_t> order(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) order[mask] = mask;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (total[a] != total[b]) return total[a] < total[b];
    return subset_lex_less(a, b);
  });
  return order;
}

NodeSet mask_to_set(std::uint32_t mask, std::span<const NodeId> positions, int universe) {
  NodeSet out(universe);
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (mask >> i & 1u) out.insert(positions[i]);
  return out;
}

}  // namespace kmcds
