#include "kmcds/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace kmcds {

NodeSet::NodeSet(int universe) : bits_(static_cast<std::size_t>(universe), 0) {
  if (universe < 0) throw std::invalid_argument("NodeSet: negative universe");
}

NodeSet::NodeSet(int universe, std::initializer_list<NodeId> members) : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet::NodeSet(int universe, std::span<const NodeId> members) : NodeSet(universe) {
  for (NodeId v : members) insert(v);
}

NodeSet NodeSet::full(int universe) {
  NodeSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.count_ = universe;
  return s;
}

bool NodeSet::contains(NodeId v) const {
  return v >= 0 && v < universe() && bits_[static_cast<std::size_t>(v)] != 0;
}

void NodeSet::insert(NodeId v) {
  if (v < 0 || v >= universe()) {
    throw std::out_of_range("NodeSet: node " + std::to_string(v) + " outside [0, " +
                            std::to_string(universe()) + ")");
  }
  auto& bit = bits_[static_cast<std::size_t>(v)];
  if (!bit) {
    bit = 1;
    ++count_;
  }
}

void NodeSet::erase(NodeId v) {
  if (!contains(v)) return;
  bits_[static_cast<std::size_t>(v)] = 0;
  --count_;
}

void NodeSet::insert_all(const NodeSet& other) {
  for (NodeId v : other.members()) insert(v);
}

NodeSet NodeSet::resized(int universe) const {
  NodeSet out(universe);
  for (NodeId v : members()) out.insert(v);
  return out;
}

NodeSet NodeSet::united(const NodeSet& other) const {
  NodeSet out = *this;
  out.insert_all(other);
  return out;
}

NodeSet NodeSet::intersected(const NodeSet& other) const {
  NodeSet out(universe());
  for (NodeId v : members())
    if (other.contains(v)) out.insert(v);
  return out;
}

NodeSet NodeSet::minus(const NodeSet& other) const {
  NodeSet out(universe());
  for (NodeId v : members())
    if (!other.contains(v)) out.insert(v);
  return out;
}

NodeSet NodeSet::complement() const {
  NodeSet out(universe());
  for (NodeId v = 0; v < universe(); ++v)
    if (!contains(v)) out.insert(v);
  return out;
}

std::vector<NodeId> NodeSet::members() const {
  std::vector<NodeId> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (NodeId v = 0; v < universe(); ++v)
    if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

Graph::Graph(int node_count, std::span<const Edge> edges) {
  if (node_count < 0) throw std::invalid_argument("graph: negative node count");
  adjacency_.resize(static_cast<std::size_t>(node_count));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= node_count || v >= node_count) {
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
    }
    if (u == v) throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw std::invalid_argument("graph: parallel edge at node " + std::to_string(v));
    }
  }
  edge_count_ = edges.size();
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u < 0 || u >= node_count()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges();
  for (auto [u, v] : extra) {
    if (!has_edge(u, v)) all.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Graph(node_count(), all);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop;
  for (auto [u, v] : removed) drop.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  return Graph(node_count(), kept);
}

NodeSet neighbors(const Graph& g, const NodeSet& nodes) {
  NodeSet out(g.node_count());
  for (NodeId v : nodes.members())
    for (NodeId w : g.adjacent(v))
      if (!nodes.contains(w)) out.insert(w);
  return out;
}

NodeSet Subgraph::lift(const NodeSet& local, int universe) const {
  NodeSet out(universe);
  for (NodeId v : local.members()) out.insert(to_original[v]);
  return out;
}

NodeSet Subgraph::lower(const NodeSet& original) const {
  NodeSet out(graph.node_count());
  for (NodeId v : original.members())
    if (v < static_cast<int>(to_local.size()) && to_local[v] >= 0) out.insert(to_local[v]);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const NodeSet& nodes) {
  Subgraph sub;
  sub.to_original = nodes.members();
  sub.to_local.assign(static_cast<std::size_t>(g.node_count()), -1);
  for (std::size_t i = 0; i < sub.to_original.size(); ++i)
    sub.to_local[sub.to_original[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (NodeId u : sub.to_original)
    for (NodeId v : g.adjacent(u))
      if (u < v && nodes.contains(v)) edges.emplace_back(sub.to_local[u], sub.to_local[v]);
  sub.graph = Graph(static_cast<int>(sub.to_original.size()), edges);
  return sub;
}

RootedGraph attach_root(const Graph& g, const NodeSet& attachment, int k) {
  if (attachment.size() != k) {
    throw std::invalid_argument("attach_root: |R| = " + std::to_string(attachment.size()) +
                                " but k = " + std::to_string(k));
  }
  const int n = g.node_count();
  std::vector<Edge> edges = g.edges();
  for (NodeId v : attachment.members()) {
    if (v >= n) throw std::invalid_argument("attach_root: attachment node out of range");
    edges.emplace_back(v, n);
  }
  return RootedGraph{Graph(n + 1, edges), n, attachment.resized(n + 1)};
}

DegreeStats degree_stats(const Graph& g) {
  if (g.node_count() == 0) return {};
  DegreeStats stats{g.degree(0), g.degree(0)};
  for (NodeId v = 1; v < g.node_count(); ++v) {
    stats.min_degree = std::min(stats.min_degree, g.degree(v));
    stats.max_degree = std::max(stats.max_degree, g.degree(v));
  }
  return stats;
}

std::vector<Edge> unit_disk_edges(const Geometry& geometry) {
  std::vector<Edge> edges;
  const auto& pts = geometry.coords;
  const __int128 r2 = static_cast<__int128>(geometry.radius) * geometry.radius;
  for (std::size_t u = 0; u < pts.size(); ++u) {
    for (std::size_t v = u + 1; v < pts.size(); ++v) {
      const __int128 dx = pts[u].x - pts[v].x;
      const __int128 dy = pts[u].y - pts[v].y;
      if (dx * dx + dy * dy <= r2) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return edges;
}

void validate(const Instance& instance) {
  const int n = instance.graph.node_count();
  if (n < 1) throw std::invalid_argument("instance: needs at least one node");
  if (static_cast<int>(instance.weights.size()) != n)
    throw std::invalid_argument("instance: weight count does not match node count");
  for (NodeId v = 0; v < n; ++v) {
    if (instance.weights[v] < 0)
      throw std::invalid_argument("instance: negative weight on node " + std::to_string(v));
  }
  if (instance.k < 1) throw std::invalid_argument("instance: k must be >= 1");
  if (instance.m < instance.k) throw std::invalid_argument("instance: m must be >= k");
  if (instance.weight_scale < 1) throw std::invalid_argument("instance: weight scale must be >= 1");
  if (instance.geometry) {
    const Geometry& geo = *instance.geometry;
    if (static_cast<int>(geo.coords.size()) != n)
      throw std::invalid_argument("instance: coordinate count does not match node count");
    if (geo.radius < 0) throw std::invalid_argument("instance: radius must be nonnegative");
    if (geo.scale < 1) throw std::invalid_argument("instance: coordinate scale must be >= 1");
    if (unit_disk_edges(geo) != instance.graph.edges())
      throw std::invalid_argument("instance: edges differ from the unit-disk edges of the coordinates");
  }
}

Instance make_instance(Graph graph, std::vector<Weight> weights, int k, int m,
                       std::optional<Geometry> geometry) {
  Instance instance{std::move(graph), std::move(weights), k, m, std::move(geometry), 1};
  validate(instance);
  return instance;
}

Weight total_weight(std::span<const Weight> weights, const NodeSet& nodes) {
  Weight sum = 0;
  for (NodeId v : nodes.members()) sum += weights[v];
  return sum;
}

}  // namespace kmcds
