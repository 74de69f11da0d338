// Shared helpers for the test suites: graph builders, seeded random
// graphs, and canonical clustering comparison.
#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "word_graph.hpp"

namespace watset::test {

inline Graph make_graph(std::size_t nodes,
                        const std::vector<std::tuple<NodeId, NodeId, double>>&
                            edges) {
  Graph g(nodes);
  for (const auto& [u, v, w] : edges) g.set_edge(u, v, w);
  return g;
}

inline Graph unit_graph(std::size_t nodes,
                        const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g(nodes);
  for (const auto& [u, v] : edges) g.set_edge(u, v, 1.0);
  return g;
}

/// k-clique over the given nodes.
inline void add_clique(Graph& g, const std::vector<NodeId>& nodes,
                       double weight = 1.0) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      g.set_edge(nodes[i], nodes[j], weight);
    }
  }
}

/// Erdos-Renyi style random graph with weights in [low, high].
inline Graph random_graph(std::mt19937_64& rng, std::size_t nodes,
                          double edge_probability, double low = 0.5,
                          double high = 2.0) {
  Graph g(nodes);
  for (NodeId u = 0; u < nodes; ++u) {
    for (NodeId v = u + 1; v < nodes; ++v) {
      double toss = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (toss < edge_probability) {
        double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        g.set_edge(u, v, low + unit * (high - low));
      }
    }
  }
  return g;
}

/// Order-free form for comparing clusterings.
inline std::set<std::vector<NodeId>> cluster_set(const Clusters& clusters) {
  std::set<std::vector<NodeId>> out;
  for (auto cluster : clusters) {
    std::sort(cluster.begin(), cluster.end());
    out.insert(std::move(cluster));
  }
  return out;
}

inline bool is_partition(const Clusters& clusters, std::size_t nodes) {
  std::vector<unsigned> hits(nodes, 0);
  for (const auto& cluster : clusters) {
    if (cluster.empty()) return false;
    for (NodeId node : cluster) {
      if (node >= nodes) return false;
      ++hits[node];
    }
  }
  return std::all_of(hits.begin(), hits.end(),
                     [](unsigned h) { return h == 1; });
}

/// Cluster index per node; requires a partition.
inline std::vector<std::size_t> cluster_assignment(const Clusters& clusters,
                                                   std::size_t nodes) {
  std::vector<std::size_t> assignment(nodes, clusters.size());
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (NodeId node : clusters[c]) assignment[node] = c;
  }
  return assignment;
}

inline std::vector<SynonymPair> make_pairs(
    const std::vector<std::pair<std::string, std::string>>& raw) {
  std::vector<SynonymPair> pairs;
  pairs.reserve(raw.size());
  for (const auto& [a, b] : raw) pairs.push_back({a, b, std::nullopt});
  return pairs;
}

}  // namespace watset::test
