#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kmcds {

using NodeId = int;
using Weight = std::int64_t;
using Edge = std::pair<NodeId, NodeId>;

/// Membership set over the dense index range [0, universe).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(int universe);
  NodeSet(int universe, std::initializer_list<NodeId> members);
  NodeSet(int universe, std::span<const NodeId> members);

  static NodeSet full(int universe);

  int universe() const { return static_cast<int>(bits_.size()); }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(NodeId v) const;

  void insert(NodeId v);
  void erase(NodeId v);
  void insert_all(const NodeSet& other);

  /// Same members over a different universe; members must fit.
  NodeSet resized(int universe) const;

  NodeSet united(const NodeSet& other) const;
  NodeSet intersected(const NodeSet& other) const;
  NodeSet minus(const NodeSet& other) const;
  NodeSet complement() const;

  /// Members in increasing order.
  std::vector<NodeId> members() const;

  bool operator==(const NodeSet& other) const = default;

 private:
  std::vector<char> bits_;
  int count_ = 0;
};

/// Immutable undirected simple graph on nodes 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, parallel edges or
  /// out-of-range endpoints.
  Graph(int node_count, std::span<const Edge> edges);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }
  std::span<const NodeId> adjacent(NodeId v) const { return adjacency_[v]; }
  bool has_edge(NodeId u, NodeId v) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy of this graph with extra edges; edges already present are skipped.
  Graph with_edges(std::span<const Edge> extra) const;
  /// Copy of this graph without the listed edges.
  Graph without_edges(std::span<const Edge> removed) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Γ(A): nodes outside A adjacent to at least one node of A.
NodeSet neighbors(const Graph& g, const NodeSet& nodes);

/// G[S] relabelled to 0..|S|-1. `to_original` maps local ids back, so the
/// identity of every node is preserved.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_original;
  std::vector<NodeId> to_local;  // -1 for nodes outside the subgraph

  NodeSet lift(const NodeSet& local, int universe) const;
  NodeSet lower(const NodeSet& original) const;
};

Subgraph induced_subgraph(const Graph& g, const NodeSet& nodes);

/// G_r: G plus a virtual root with index n adjacent to exactly R.
struct RootedGraph {
  Graph graph;
  NodeId root;
  NodeSet attachment;  // R, over the universe n + 1
};

/// Throws std::invalid_argument unless |R| == k.
RootedGraph attach_root(const Graph& g, const NodeSet& attachment, int k);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
};

DegreeStats degree_stats(const Graph& g);

/// Unit-disk geometry in fixed point: true coordinate = value / scale.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

struct Geometry {
  std::vector<Point> coords;
  std::int64_t radius = 0;
  std::int64_t scale = 1;
  bool operator==(const Geometry&) const = default;
};

/// Pairs at Euclidean distance <= radius, compared exactly on squares.
std::vector<Edge> unit_disk_edges(const Geometry& geometry);

struct Instance {
  Graph graph;
  std::vector<Weight> weights;
  int k = 1;
  int m = 1;
  std::optional<Geometry> geometry;
  std::int64_t weight_scale = 1;  // file weight = weights[v] / weight_scale

  int node_count() const { return graph.node_count(); }
  bool operator==(const Instance&) const = default;
};

/// Checks every Instance invariant; throws std::invalid_argument.
void validate(const Instance& instance);

Instance make_instance(Graph graph, std::vector<Weight> weights, int k, int m,
                       std::optional<Geometry> geometry = std::nullopt);

Weight total_weight(std::span<const Weight> weights, const NodeSet& nodes);

}  // namespace kmcds
