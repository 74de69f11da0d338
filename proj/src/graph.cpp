#include "graph.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace watset {

NodeId Graph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_endpoints(NodeId u, NodeId v, double weight) const {
  if (u >= node_count() || v >= node_count()) {
    throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
  }
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "self-loop on node " + std::to_string(u));
  }
  if (!(weight > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "edge weight must be positive");
  }
}

bool Graph::upsert_half_edge(NodeId u, NodeId v, double weight, bool keep_max) {
  auto& row = adjacency_[u];
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const Neighbor& n, NodeId id) { return n.node < id; });
  if (it != row.end() && it->node == v) {
    it->weight = keep_max ? std::max(it->weight, weight) : weight;
    return false;
  }
  row.insert(it, Neighbor{v, weight});
  return true;
}

void Graph::set_edge(NodeId u, NodeId v, double weight) {
  check_endpoints(u, v, weight);
  if (upsert_half_edge(u, v, weight, false)) ++edge_count_;
  upsert_half_edge(v, u, weight, false);
}

void Graph::merge_edge_max(NodeId u, NodeId v, double weight) {
  check_endpoints(u, v, weight);
  if (upsert_half_edge(u, v, weight, true)) ++edge_count_;
  upsert_half_edge(v, u, weight, true);
}

std::optional<double> Graph::weight(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  const auto& row = adjacency_[u];
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const Neighbor& n, NodeId id) { return n.node < id; });
  if (it != row.end() && it->node == v) return it->weight;
  return std::nullopt;
}

Clusters connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  Clusters components;
  std::vector<NodeId> stack;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component;
    stack.push_back(start);
    seen[start] = true;
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (const Neighbor& nb : g.neighbors(u)) {
        if (!seen[nb.node]) {
          seen[nb.node] = true;
          stack.push_back(nb.node);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

EgoNetwork ego_network(const Graph& g, NodeId ego) {
  if (ego >= g.node_count()) {
    throw Error(ErrorCode::UnknownWord,
                "node " + std::to_string(ego) + " not in graph");
  }
  EgoNetwork net;
  net.ego = ego;
  const auto alters = g.neighbors(ego);
  net.members.reserve(alters.size());
  for (const Neighbor& nb : alters) net.members.push_back(nb.node);

  net.graph = Graph(net.members.size());
  for (std::size_t i = 0; i < net.members.size(); ++i) {
    for (const Neighbor& nb : g.neighbors(net.members[i])) {
      auto it = std::lower_bound(net.members.begin(), net.members.end(),
                                 nb.node);
      if (it == net.members.end() || *it != nb.node) continue;
      auto j = static_cast<std::size_t>(it - net.members.begin());
      if (j > i) {
        net.graph.set_edge(static_cast<NodeId>(i), static_cast<NodeId>(j),
                           nb.weight);
      }
    }
  }
  return net;
}

}  // namespace watset
