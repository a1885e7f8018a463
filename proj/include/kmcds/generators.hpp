#pragma once

#include <cstdint>

#include "kmcds/graph.hpp"

namespace kmcds {

struct WeightRange {
  Weight min = 1;
  Weight max = 1;
};

inline constexpr std::int64_t kDefaultCoordScale = 1'000'000;

/// n points uniform on the unit square (fixed-point, kDefaultCoordScale),
/// edges by the exact distance rule. Same seed, same instance.
Instance gen_unit_disk(int n, double radius, WeightRange weights, std::uint64_t seed, int k = 1, int m = 1);

/// Erdős–Rényi G(n, p). Same seed, same instance.
Instance gen_gnp(int n, double p, WeightRange weights, std::uint64_t seed, int k = 1, int m = 1);

/// Seed for the i-th item of a stream (splitmix64 finaliser).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

}  // namespace kmcds
