#include "kmcds/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace kmcds {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not, so
// the mappings below are spelled out.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Weight> draw_weights(std::mt19937_64& rng, int n, WeightRange range) {
  if (range.min < 0 || range.max < range.min) throw std::invalid_argument("weight range must satisfy 0 <= min <= max");
  std::vector<Weight> weights(static_cast<std::size_t>(n));
  for (auto& w : weights) w = uniform_int(rng, range.min, range.max);
  return weights;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Instance gen_unit_disk(int n, double radius, WeightRange weights, std::uint64_t seed, int k, int m) {
  if (n < 1) throw std::invalid_argument("gen_unit_disk: n must be >= 1");
  if (radius < 0) throw std::invalid_argument("gen_unit_disk: radius must be >= 0");
  std::mt19937_64 rng(seed);
  Geometry geometry;
  geometry.scale = kDefaultCoordScale;
  geometry.radius = std::llround(radius * static_cast<double>(kDefaultCoordScale));
  geometry.coords.resize(static_cast<std::size_t>(n));
  for (auto& p : geometry.coords) {
    p.x = uniform_int(rng, 0, kDefaultCoordScale);
    p.y = uniform_int(rng, 0, kDefaultCoordScale);
  }
  std::vector<Weight> w = draw_weights(rng, n, weights);
  const std::vector<Edge> edges = unit_disk_edges(geometry);
  return make_instance(Graph(n, edges), std::move(w), k, m, std::move(geometry));
}

Instance gen_gnp(int n, double p, WeightRange weights, std::uint64_t seed, int k, int m) {
  if (n < 1) throw std::invalid_argument("gen_gnp: n must be >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
  std::vector<Weight> w = draw_weights(rng, n, weights);
  return make_instance(Graph(n, edges), std::move(w), k, m);
}

}  // namespace kmcds
