#pragma once

#include "graph.hpp"

namespace watset {

struct MarkovClusteringParams {
  unsigned expansion = 2;      // matrix power per iteration, >= 2
  double inflation = 2.0;      // elementwise power, > 1
  unsigned max_iterations = 20;
  double convergence_epsilon = 1e-5;  // max-norm change considered converged
  double prune_below = 1e-5;          // entries below this are dropped
};

/// Flow-simulation hard clustering. Builds a column-stochastic transition
/// matrix from the edge weights with a self-loop per node (weight = the
/// node's maximum incident edge weight, 1 for isolated nodes, so the
/// partition is invariant under uniform weight scaling), then alternates
/// expansion and inflation until the matrix stops changing. Clusters are
/// read off attractor rows; overlapping rows merge and uncovered nodes
/// become singletons.
/// Throws EmptyInput on an empty graph, InvalidArgument on bad params.
Clusters markov_clustering(const Graph& g,
                           const MarkovClusteringParams& params = {});

}  // namespace watset
