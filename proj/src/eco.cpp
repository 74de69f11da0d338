#include "eco.hpp"

#include <random>

#include "error.hpp"
#include "random.hpp"
#include "word_graph.hpp"

namespace watset {

namespace {

void check_params(const Graph& g, const EcoParams& params) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "eco on empty graph");
  }
  if (params.runs < 1) {
    throw Error(ErrorCode::InvalidArgument, "runs must be >= 1");
  }
  if (!(params.noise_magnitude > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "noise_magnitude must be > 0");
  }
  if (!(params.threshold > 0.0) || !(params.threshold < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "threshold must be in (0, 1)");
  }
}

Graph perturb(const Graph& g, double magnitude, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph noisy(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.node <= u) continue;  // canonical edge order for the rng stream
      double noise = magnitude * (2.0 * uniform_unit(rng) - 1.0);
      noisy.set_edge(u, nb.node, std::max(kEpsilonWeight, nb.weight + noise));
    }
  }
  return noisy;
}

}  // namespace

std::map<std::pair<NodeId, NodeId>, double> eco_pair_probabilities(
    const Graph& g, const EcoParams& params) {
  check_params(g, params);
  std::map<std::pair<NodeId, NodeId>, unsigned> counts;
  for (unsigned run = 0; run < params.runs; ++run) {
    Graph noisy = perturb(g, params.noise_magnitude, params.seed + run);
    for (const auto& cluster : markov_clustering(noisy, params.mcl)) {
      for (std::size_t i = 0; i < cluster.size(); ++i) {
        for (std::size_t j = i + 1; j < cluster.size(); ++j) {
          ++counts[{cluster[i], cluster[j]}];
        }
      }
    }
  }
  std::map<std::pair<NodeId, NodeId>, double> probabilities;
  for (const auto& [pair, count] : counts) {
    probabilities[pair] = static_cast<double>(count) / params.runs;
  }
  return probabilities;
}

Clusters eco(const Graph& g, const EcoParams& params) {
  auto probabilities = eco_pair_probabilities(g, params);
  Graph pair_graph(g.node_count());
  for (const auto& [pair, probability] : probabilities) {
    if (probability > params.threshold) {
      pair_graph.set_edge(pair.first, pair.second, probability);
    }
  }
  return connected_components(pair_graph);
}

}  // namespace watset
