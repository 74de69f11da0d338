#include "clique_percolation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "error.hpp"

namespace watset {

namespace {

struct BronKerbosch {
  const Graph& g;
  std::vector<std::vector<NodeId>> cliques;

  std::vector<NodeId> intersect_neighbors(const std::vector<NodeId>& nodes,
                                          NodeId u) const {
    std::vector<NodeId> out;
    out.reserve(nodes.size());
    for (NodeId v : nodes) {
      if (v != u && g.has_edge(u, v)) out.push_back(v);
    }
    return out;
  }

  void expand(std::vector<NodeId>& r, std::vector<NodeId> p,
              std::vector<NodeId> x) {
    if (p.empty() && x.empty()) {
      cliques.push_back(r);
      return;
    }
    // pivot on the node covering the most of p
    NodeId pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    for (const auto* pool : {&p, &x}) {
      for (NodeId u : *pool) {
        std::size_t covered = 0;
        for (NodeId v : p) {
          if (v != u && g.has_edge(u, v)) ++covered;
        }
        if (!have_pivot || covered > best) {
          pivot = u;
          best = covered;
          have_pivot = true;
        }
      }
    }

    std::vector<NodeId> candidates;
    for (NodeId u : p) {
      if (!g.has_edge(pivot, u)) candidates.push_back(u);
    }
    for (NodeId u : candidates) {
      r.push_back(u);
      expand(r, intersect_neighbors(p, u), intersect_neighbors(x, u));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), u));
      x.insert(std::lower_bound(x.begin(), x.end(), u), u);
    }
  }
};

void k_subsets(const std::vector<NodeId>& clique, unsigned k,
               std::set<std::vector<NodeId>>& out) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<NodeId> subset(k);
    for (unsigned i = 0; i < k; ++i) subset[i] = clique[pick[i]];
    out.insert(std::move(subset));

    // next combination in lexicographic order
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == clique.size() - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (unsigned j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<std::vector<NodeId>> maximal_cliques(const Graph& g) {
  std::vector<NodeId> all(g.node_count());
  std::iota(all.begin(), all.end(), NodeId{0});
  BronKerbosch bk{g, {}};
  std::vector<NodeId> r;
  bk.expand(r, std::move(all), {});
  for (auto& clique : bk.cliques) std::sort(clique.begin(), clique.end());
  std::sort(bk.cliques.begin(), bk.cliques.end());
  return bk.cliques;
}

std::vector<std::vector<NodeId>> enumerate_k_cliques(const Graph& g,
                                                     unsigned k) {
  if (k < 2) {
    throw Error(ErrorCode::InvalidArgument, "clique size k must be >= 2");
  }
  std::set<std::vector<NodeId>> cliques;
  for (const auto& maximal : maximal_cliques(g)) {
    if (maximal.size() >= k) k_subsets(maximal, k, cliques);
  }
  return {cliques.begin(), cliques.end()};
}

Clusters clique_percolation(const Graph& g, unsigned k) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "clique percolation on empty graph");
  }
  auto cliques = enumerate_k_cliques(g, k);
  if (cliques.empty()) return {};

  // two k-cliques are adjacent iff they share a (k-1)-subset
  UnionFind adjacency(cliques.size());
  std::map<std::vector<NodeId>, std::size_t> seen;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    std::set<std::vector<NodeId>> subsets;
    k_subsets(cliques[c], k - 1, subsets);
    for (const auto& subset : subsets) {
      auto [it, inserted] = seen.try_emplace(subset, c);
      if (!inserted) adjacency.unite(c, it->second);
    }
  }

  std::map<std::size_t, std::set<NodeId>> communities;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    auto& community = communities[adjacency.find(c)];
    community.insert(cliques[c].begin(), cliques[c].end());
  }
  Clusters clusters;
  clusters.reserve(communities.size());
  for (const auto& [root, members] : communities) {
    clusters.emplace_back(members.begin(), members.end());
  }
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

Clusters pad_with_singletons(const Graph& g, Clusters clusters) {
  std::vector<bool> covered(g.node_count(), false);
  for (const auto& cluster : clusters) {
    for (NodeId node : cluster) covered[node] = true;
  }
  for (NodeId node = 0; node < g.node_count(); ++node) {
    if (!covered[node]) clusters.push_back({node});
  }
  return clusters;
}

}  // namespace watset
