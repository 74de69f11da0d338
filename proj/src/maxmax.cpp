#include "maxmax.hpp"

#include <algorithm>

#include "error.hpp"

namespace watset {

MaxMaxResult maxmax_detailed(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) {
    throw Error(ErrorCode::EmptyInput, "maxmax on empty graph");
  }

  MaxMaxResult result;
  result.successors.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto neighbors = g.neighbors(v);
    if (neighbors.empty()) continue;
    double max_weight = 0.0;
    for (const Neighbor& nb : neighbors) {
      max_weight = std::max(max_weight, nb.weight);
    }
    for (const Neighbor& nb : neighbors) {
      if (nb.weight == max_weight) {
        result.successors[nb.node].push_back(v);  // maximal neighbor -> v
      }
    }
  }
  for (auto& succ : result.successors) std::sort(succ.begin(), succ.end());

  std::vector<bool> root(n, true);
  std::vector<bool> visited(n, false);
  std::vector<NodeId> stack;
  for (NodeId u = 0; u < n; ++u) {
    if (!root[u]) continue;
    // collect the transitive descendants of u
    std::fill(visited.begin(), visited.end(), false);
    visited[u] = true;
    std::vector<NodeId> cluster{u};
    for (NodeId v : result.successors[u]) {
      if (!visited[v]) {
        visited[v] = true;
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      cluster.push_back(v);
      root[v] = false;
      for (NodeId w : result.successors[v]) {
        if (!visited[w]) {
          visited[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(cluster.begin(), cluster.end());
    result.roots.push_back(u);
    result.clusters.push_back(std::move(cluster));
  }
  return result;
}

Clusters maxmax(const Graph& g) { return maxmax_detailed(g).clusters; }

}  // namespace watset
