#pragma once

#include <vector>

#include "graph.hpp"

namespace watset {

struct MaxMaxResult {
  /// successors[u] = nodes v with u -> v, i.e. u is a maximal-affinity
  /// neighbor of v. Ties keep all tied neighbors.
  std::vector<std::vector<NodeId>> successors;
  /// One root per cluster, parallel to `clusters`.
  std::vector<NodeId> roots;
  Clusters clusters;
};

/// Fuzzy clustering by maximal mutual affinity. Builds the directed graph
/// of maximal-affinity edges, then walks the nodes in ascending id order:
/// each node still marked root emits a cluster made of itself plus all its
/// transitive descendants, which are demoted to non-root.
/// Throws EmptyInput on an empty graph.
MaxMaxResult maxmax_detailed(const Graph& g);

Clusters maxmax(const Graph& g);

}  // namespace watset
