#pragma once

#include "chinese_whispers.hpp"
#include "graph.hpp"
#include "markov_clustering.hpp"

namespace watset {

enum class ClusterAlgorithm { ChineseWhispers, MarkovClustering };

/// A hard clusterer pick, pluggable as the local or global stage.
struct ClustererSpec {
  ClusterAlgorithm algorithm = ClusterAlgorithm::ChineseWhispers;
  ChineseWhispersParams cw;
  MarkovClusteringParams mcl;
};

inline Clusters run_clusterer(const Graph& g, const ClustererSpec& spec) {
  switch (spec.algorithm) {
    case ClusterAlgorithm::ChineseWhispers:
      return chinese_whispers(g, spec.cw);
    case ClusterAlgorithm::MarkovClustering:
      return markov_clustering(g, spec.mcl);
  }
  return {};
}

}  // namespace watset
