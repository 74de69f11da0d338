#include "markov_clustering.hpp"

#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "error.hpp"

namespace watset {

namespace {

using SparseMatrix = Eigen::SparseMatrix<double>;  // column-major

void normalize_columns(SparseMatrix& m) {
  Eigen::VectorXd sums = Eigen::VectorXd::Zero(m.cols());
  for (int col = 0; col < m.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      sums[col] += it.value();
    }
  }
  for (int col = 0; col < m.outerSize(); ++col) {
    if (sums[col] == 0.0) continue;
    for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
      it.valueRef() /= sums[col];
    }
  }
}

double max_abs_difference(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix diff = a - b;
  double max = 0.0;
  for (int col = 0; col < diff.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(diff, col); it; ++it) {
      max = std::max(max, std::abs(it.value()));
    }
  }
  return max;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), NodeId{0});
  }
  NodeId find(NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(NodeId a, NodeId b) { parent[find(a)] = find(b); }
  std::vector<NodeId> parent;
};

}  // namespace

Clusters markov_clustering(const Graph& g,
                           const MarkovClusteringParams& params) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "markov clustering on empty graph");
  }
  if (params.expansion < 2) {
    throw Error(ErrorCode::InvalidArgument, "expansion must be >= 2");
  }
  if (!(params.inflation > 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "inflation must be > 1");
  }
  if (params.max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  }

  const auto n = static_cast<int>(g.node_count());
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * g.edge_count() + g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    double max_incident = 0.0;
    for (const Neighbor& nb : g.neighbors(u)) {
      // column u holds the transition probabilities out of u
      triplets.emplace_back(static_cast<int>(nb.node), static_cast<int>(u),
                            nb.weight);
      max_incident = std::max(max_incident, nb.weight);
    }
    double self_loop = max_incident > 0.0 ? max_incident : 1.0;
    triplets.emplace_back(static_cast<int>(u), static_cast<int>(u), self_loop);
  }
  SparseMatrix matrix(n, n);
  matrix.setFromTriplets(triplets.begin(), triplets.end());
  normalize_columns(matrix);

  for (unsigned iteration = 0; iteration < params.max_iterations;
       ++iteration) {
    SparseMatrix expanded = matrix;
    for (unsigned e = 1; e < params.expansion; ++e) {
      expanded = (expanded * matrix).pruned();
    }
    for (int col = 0; col < expanded.outerSize(); ++col) {
      for (SparseMatrix::InnerIterator it(expanded, col); it; ++it) {
        it.valueRef() = std::pow(it.value(), params.inflation);
      }
    }
    normalize_columns(expanded);
    expanded.prune([&](int, int, double value) {
      return value >= params.prune_below;
    });

    double change = max_abs_difference(expanded, matrix);
    matrix = std::move(expanded);
    if (change < params.convergence_epsilon) break;
  }

  // Attractor rows: i with matrix(i,i) > 0 claims every j with
  // matrix(i,j) > 0; overlapping claims merge. Nodes left unclaimed
  // become singletons.
  std::vector<std::vector<NodeId>> row_support(g.node_count());
  std::vector<bool> attractor(g.node_count(), false);
  for (int col = 0; col < matrix.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(matrix, col); it; ++it) {
      row_support[static_cast<NodeId>(it.row())].push_back(
          static_cast<NodeId>(col));
      if (it.row() == col) attractor[static_cast<NodeId>(col)] = true;
    }
  }

  UnionFind components(g.node_count());
  std::vector<bool> covered(g.node_count(), false);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    if (!attractor[i]) continue;
    covered[i] = true;
    for (NodeId j : row_support[i]) {
      covered[j] = true;
      components.unite(i, j);
    }
  }

  std::vector<std::vector<NodeId>> groups(g.node_count());
  Clusters clusters;
  for (NodeId node = 0; node < g.node_count(); ++node) {
    if (covered[node]) {
      groups[components.find(node)].push_back(node);
    } else {
      clusters.push_back({node});
    }
  }
  for (auto& group : groups) {
    if (!group.empty()) clusters.push_back(std::move(group));
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

}  // namespace watset
