#include "clique_percolation.hpp"

#include <doctest.h>

#include <algorithm>

#include "error.hpp"
#include "support.hpp"

using namespace watset;

namespace {

// Brute-force k-clique enumeration for the oracle checks.
std::vector<std::vector<NodeId>> brute_force_k_cliques(const Graph& g,
                                                       unsigned k) {
  std::vector<std::vector<NodeId>> cliques;
  std::vector<NodeId> current;
  auto extend = [&](auto&& self, NodeId next) -> void {
    if (current.size() == k) {
      cliques.push_back(current);
      return;
    }
    for (NodeId v = next; v < g.node_count(); ++v) {
      bool joins = std::all_of(current.begin(), current.end(),
                               [&](NodeId u) { return g.has_edge(u, v); });
      if (joins) {
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
      }
    }
  };
  extend(extend, 0);
  return cliques;
}

}  // namespace

TEST_CASE("k=2 communities are the connected components with edges") {
  Graph g = test::unit_graph(6, {{0, 1}, {1, 2}, {3, 4}});
  Clusters communities = clique_percolation(g, 2);
  CHECK(test::cluster_set(communities) ==
        std::set<std::vector<NodeId>>{{0, 1, 2}, {3, 4}});  // 5 is omitted
}

TEST_CASE("two triangles sharing an edge percolate into one community") {
  // triangles {0,1,2} and {1,2,3} share the 2-node edge {1,2}
  Graph g = test::unit_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto cliques = enumerate_k_cliques(g, 3);
  CHECK(cliques == brute_force_k_cliques(g, 3));
  REQUIRE(cliques.size() == 2);

  Clusters communities = clique_percolation(g, 3);
  CHECK(test::cluster_set(communities) ==
        std::set<std::vector<NodeId>>{{0, 1, 2, 3}});
}

TEST_CASE("triangle-free graphs have no 3-clique communities") {
  Graph g = test::unit_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(clique_percolation(g, 3).empty());
}

TEST_CASE("two triangles sharing one node stay separate at k=3") {
  Graph g = test::unit_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(test::cluster_set(clique_percolation(g, 3)) ==
        std::set<std::vector<NodeId>>{{0, 1, 2}, {2, 3, 4}});
}

TEST_CASE("k below 2 and empty graphs are errors") {
  Graph g = test::unit_graph(2, {{0, 1}});
  CHECK_THROWS_AS(clique_percolation(g, 1), Error);
  Graph empty;
  CHECK_THROWS_AS(clique_percolation(empty, 2), Error);
}

TEST_CASE("maximal cliques match an independent enumeration") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 20; ++round) {
    Graph g = test::random_graph(rng, 4 + rng() % 10, 0.5);
    auto maximal = maximal_cliques(g);
    // every reported clique is a clique and is maximal
    for (const auto& clique : maximal) {
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          CHECK(g.has_edge(clique[i], clique[j]));
        }
      }
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (std::binary_search(clique.begin(), clique.end(), v)) continue;
        bool extends = std::all_of(clique.begin(), clique.end(),
                                   [&](NodeId u) { return g.has_edge(u, v); });
        CHECK_FALSE(extends);
      }
    }
    // and the 2-clique expansion agrees with the edge set
    auto two_cliques = enumerate_k_cliques(g, 2);
    CHECK(two_cliques.size() == g.edge_count());
  }
}

TEST_CASE("k-clique enumeration matches brute force on random graphs") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 15; ++round) {
    Graph g = test::random_graph(rng, 4 + rng() % 9, 0.5);
    for (unsigned k = 2; k <= 4; ++k) {
      CHECK(enumerate_k_cliques(g, k) == brute_force_k_cliques(g, k));
    }
  }
}

TEST_CASE("singleton padding covers the whole vocabulary") {
  Graph g = test::unit_graph(5, {{0, 1}, {1, 2}});
  Clusters padded = pad_with_singletons(g, clique_percolation(g, 3));
  CHECK(test::cluster_set(padded) ==
        std::set<std::vector<NodeId>>{{0}, {1}, {2}, {3}, {4}});
}
