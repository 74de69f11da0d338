#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "graph.hpp"
#include "markov_clustering.hpp"

namespace watset {

struct EcoParams {
  unsigned runs = 100;
  double noise_magnitude = 0.05;  // uniform in [-m, +m] added per weight
  double threshold = 0.5;         // pair probability cut, in (0, 1)
  std::uint64_t seed = 0;
  MarkovClusteringParams mcl;     // per-run clustering engine
};

/// Probability of each unordered pair ending up in the same cluster across
/// the noisy runs. Run r uses seed + r, so results do not depend on
/// execution order.
std::map<std::pair<NodeId, NodeId>, double> eco_pair_probabilities(
    const Graph& g, const EcoParams& params);

/// Fuzzy clustering by repeated noisy Markov Clustering: pairs whose
/// co-occurrence probability exceeds the threshold form a pair graph whose
/// connected components are the output synsets; words in no surviving pair
/// come out as singletons.
/// Throws EmptyInput on an empty graph, InvalidArgument on bad params.
Clusters eco(const Graph& g, const EcoParams& params);

}  // namespace watset
