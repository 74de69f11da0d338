#pragma once

#include <vector>

#include "graph.hpp"

namespace watset {

/// All maximal cliques (Bron-Kerbosch with pivoting). Each clique holds
/// ascending node ids; the list is sorted.
std::vector<std::vector<NodeId>> maximal_cliques(const Graph& g);

/// All k-cliques, deduplicated across the maximal cliques containing them.
/// Requires k >= 2.
std::vector<std::vector<NodeId>> enumerate_k_cliques(const Graph& g,
                                                     unsigned k);

/// Clique percolation communities: k-cliques sharing k-1 nodes chain into
/// one community. Edge weights are ignored. Nodes in no k-clique do not
/// appear in any community.
/// Throws EmptyInput on an empty graph, InvalidArgument when k < 2.
Clusters clique_percolation(const Graph& g, unsigned k);

/// Appends a singleton cluster for every node of g not covered by
/// `clusters`; used by the CLI so clique percolation output covers the
/// vocabulary like the other methods.
Clusters pad_with_singletons(const Graph& g, Clusters clusters);

}  // namespace watset
