#include "kmcds/flow.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace kmcds {

SplitFlowNetwork::SplitFlowNetwork(const Graph& g, NodeId source, NodeId sink,
                                   std::span<const Cost> node_costs,
                                   std::span<const Cost> edge_costs)
    : graph_(&g), source_(source), sink_(sink) {
  const int n = g.node_count();
  if (source < 0 || sink < 0 || source >= n || sink >= n)
    throw std::invalid_argument("flow network: terminal out of range");
  if (source == sink) throw std::invalid_argument("flow network: source equals sink");
  if (!node_costs.empty() && static_cast<int>(node_costs.size()) != n)
    throw std::invalid_argument("flow network: node cost count mismatch");
  if (!edge_costs.empty() && edge_costs.size() != g.edge_count())
    throw std::invalid_argument("flow network: edge cost count mismatch");

  out_arcs_.resize(static_cast<std::size_t>(2 * n));
  internal_arc_.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    const int cap = (v == source || v == sink) ? kUnbounded : 1;
    internal_arc_[v] = add_arc(in(v), out(v), cap, node_costs.empty() ? 0 : node_costs[v]);
  }
  std::size_t index = 0;
  for (auto [u, v] : g.edges()) {
    const Cost c = edge_costs.empty() ? 0 : edge_costs[index];
    add_arc(out(u), in(v), 1, c);
    add_arc(out(v), in(u), 1, c);
    ++index;
  }
}

int SplitFlowNetwork::add_arc(int from, int to, int cap, Cost cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, cap, cost});
  arcs_.push_back({from, 0, -cost});
  original_cap_.push_back(cap);
  original_cap_.push_back(0);
  out_arcs_[from].push_back(id);
  out_arcs_[to].push_back(id + 1);
  return id;
}

bool SplitFlowNetwork::augment(bool use_costs) {
  const int nodes = static_cast<int>(out_arcs_.size());
  const int s = in(source_);
  const int t = out(sink_);
  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  std::vector<Cost> dist(nodes, kInf);
  std::vector<int> via(nodes, -1);
  std::vector<char> queued(nodes, 0);
  std::deque<int> queue{s};
  dist[s] = 0;
  queued[s] = 1;
  // FIFO label-correcting search. Without costs every label is the BFS depth.
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    queued[x] = 0;
    for (int id : out_arcs_[x]) {
      const Arc& arc = arcs_[id];
      if (arc.cap <= 0) continue;
      const Cost nd = dist[x] + (use_costs ? arc.cost : 1);
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        via[arc.to] = id;
        if (!queued[arc.to]) {
          queued[arc.to] = 1;
          queue.push_back(arc.to);
        }
      }
    }
    if (!use_costs && dist[t] != kInf) break;
  }
  if (dist[t] == kInf) return false;

  int bottleneck = kUnbounded;
  for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) bottleneck = std::min(bottleneck, arcs_[via[x]].cap);
  bottleneck = std::min(bottleneck, 1);  // one path per augmentation keeps paths() simple
  for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
    arcs_[via[x]].cap -= bottleneck;
    arcs_[via[x] ^ 1].cap += bottleneck;
    cost_ += arcs_[via[x]].cost * bottleneck;
  }
  flow_ += bottleneck;
  return true;
}

int SplitFlowNetwork::max_flow(int cap) {
  while (flow_ < cap && augment(false)) {
  }
  return flow_;
}

int SplitFlowNetwork::min_cost_flow(int target) {
  while (flow_ < target && augment(true)) {
  }
  return flow_;
}

std::vector<std::vector<NodeId>> SplitFlowNetwork::paths() const {
  // Remaining flow per arc; consumed as paths are peeled off.
  std::vector<int> flow(arcs_.size(), 0);
  for (std::size_t id = 0; id < arcs_.size(); id += 2) flow[id] = original_cap_[id] - arcs_[id].cap;

  auto next_arc = [&](int x) {
    for (int id : out_arcs_[x])
      if ((id & 1) == 0 && flow[id] > 0) return id;
    return -1;
  };

  std::vector<std::vector<NodeId>> result;
  const int s = in(source_);
  const int t = out(sink_);
  for (int p = 0; p < flow_; ++p) {
    std::vector<int> arc_path;
    std::vector<int> position(out_arcs_.size(), -1);
    int x = s;
    position[x] = 0;
    while (x != t) {
      const int id = next_arc(x);
      if (id < 0) break;
      const int y = arcs_[id].to;
      if (position[y] >= 0) {
        // Drop the flow cycle closing at y.
        flow[id] -= 1;
        while (static_cast<int>(arc_path.size()) > position[y]) {
          const int back = arc_path.back();
          arc_path.pop_back();
          flow[back] -= 1;
          position[arcs_[back].to] = -1;
        }
        position[y] = static_cast<int>(arc_path.size());
        x = y;
        continue;
      }
      arc_path.push_back(id);
      position[y] = static_cast<int>(arc_path.size());
      x = y;
    }
    if (x != t) break;
    std::vector<NodeId> nodes;
    for (int id : arc_path) {
      flow[id] -= 1;
      const int to = arcs_[id].to;
      if (to % 2 == 1) nodes.push_back(to / 2);  // entered v_out
    }
    result.push_back(std::move(nodes));
  }
  return result;
}

std::vector<NodeId> SplitFlowNetwork::min_separator() const {
  const int nodes = static_cast<int>(out_arcs_.size());
  std::vector<char> reached(nodes, 0);
  std::deque<int> queue{in(source_)};
  reached[in(source_)] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int id : out_arcs_[x]) {
      if (arcs_[id].cap > 0 && !reached[arcs_[id].to]) {
        reached[arcs_[id].to] = 1;
        queue.push_back(arcs_[id].to);
      }
    }
  }
  // The cut may cross edge arcs as well as node arcs. A crossing edge arc
  // x_out -> y_in is charged to y, or to x when y is the sink; the direct
  // source-sink edge has no node to charge.
  std::vector<char> in_cut(static_cast<std::size_t>(graph_->node_count()), 0);
  for (NodeId v = 0; v < graph_->node_count(); ++v) {
    if (reached[in(v)] && !reached[out(v)]) in_cut[v] = 1;
    if (!reached[out(v)]) continue;
    for (NodeId w : graph_->adjacent(v)) {
      if (reached[in(w)]) continue;
      if (w != sink_) in_cut[w] = 1;
      else if (v != source_) in_cut[v] = 1;
    }
  }
  std::vector<NodeId> cut;
  for (NodeId v = 0; v < graph_->node_count(); ++v)
    if (in_cut[v] && v != source_ && v != sink_) cut.push_back(v);
  return cut;
}

}  // namespace kmcds
