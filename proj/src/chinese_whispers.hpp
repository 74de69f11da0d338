#pragma once

#include <cstdint>
#include <span>

#include "graph.hpp"

namespace watset {

/// Neighbor influence normalization for Chinese Whispers: top uses the raw
/// edge weight, nolog divides it by the neighbor's degree, log by the
/// natural log of (1 + degree).
enum class ChineseWhispersMode { Top, Log, NoLog };

struct ChineseWhispersParams {
  ChineseWhispersMode mode = ChineseWhispersMode::Top;
  std::uint64_t seed = 0;
  unsigned max_iterations = 20;
};

/// Label-propagation hard clustering. Every node starts with its own label;
/// each pass visits the nodes in seed-shuffled order and each node adopts
/// the label with the strongest summed influence among its neighbors, until
/// a full pass changes nothing or max_iterations is reached. Ties go to the
/// label carried by the smallest neighbor id, which is the lexicographically
/// smallest word when the graph came from a WordGraph.
Clusters chinese_whispers(const Graph& g, const ChineseWhispersParams& params);

/// The label `node` would adopt under `labels`; returns the current label
/// when the node has no neighbors. Exposed for direct tests of the mode
/// formulas.
NodeId chinese_whispers_vote(const Graph& g, std::span<const NodeId> labels,
                             NodeId node, ChineseWhispersMode mode);

/// Groups equal labels into clusters (ascending members, clusters ordered
/// by smallest member).
Clusters clusters_from_labels(std::span<const NodeId> labels);

}  // namespace watset
