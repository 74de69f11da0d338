#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace watset {

using NodeId = std::uint32_t;

struct Neighbor {
  NodeId node;
  double weight;

  bool operator==(const Neighbor&) const = default;
};

/// Clustering output shared by all algorithms: each cluster holds node ids
/// in ascending order; cluster order is deterministic per algorithm.
using Clusters = std::vector<std::vector<NodeId>>;

/// Undirected weighted graph over dense node ids 0..node_count()-1.
/// No self-loops, all weights positive, adjacency kept sorted by node id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  NodeId add_node();

  /// Inserts the undirected edge (u, v), replacing the weight if it exists.
  void set_edge(NodeId u, NodeId v, double weight);

  /// Inserts the undirected edge (u, v), keeping the maximum weight if it
  /// already exists.
  void merge_edge_max(NodeId u, NodeId v, double weight);

  bool has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }
  std::optional<double> weight(NodeId u, NodeId v) const;

  std::span<const Neighbor> neighbors(NodeId u) const {
    return adjacency_[u];
  }
  std::size_t degree(NodeId u) const { return adjacency_[u].size(); }

  bool operator==(const Graph&) const = default;

 private:
  void check_endpoints(NodeId u, NodeId v, double weight) const;
  // Returns true when the (u, v) entry was newly created.
  bool upsert_half_edge(NodeId u, NodeId v, double weight, bool keep_max);

  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Connected components; isolated nodes come out as singletons. Components
/// hold ascending node ids and are ordered by smallest member.
Clusters connected_components(const Graph& g);

/// The subgraph induced by the neighbors of `ego`, with the ego itself
/// removed. `members[i]` is the parent id of local node i, ascending.
struct EgoNetwork {
  NodeId ego = 0;
  std::vector<NodeId> members;
  Graph graph;
};

EgoNetwork ego_network(const Graph& g, NodeId ego);

}  // namespace watset
