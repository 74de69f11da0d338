#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clusterer.hpp"
#include "graph.hpp"
#include "word_graph.hpp"

namespace watset {

/// Sense `index` of word node `word`, with its ambiguous context ctx(s):
/// the members of one cluster of the word's ego network, each weighted by
/// its edge weight to the word. Context entries are ascending by word id
/// and never include the word itself.
struct WordSense {
  NodeId word = 0;
  std::uint32_t index = 0;
  std::vector<Neighbor> context;
};

/// All induced senses, densely numbered in (word, index) order. Immutable;
/// concurrent reads are safe.
class SenseInventory {
 public:
  SenseInventory() = default;
  /// `senses` must cover every word 0..word_count-1 with at least one
  /// sense, grouped by word with indices 0,1,... in order; otherwise
  /// throws InconsistentInventory.
  SenseInventory(std::vector<WordSense> senses, std::size_t word_count);

  std::size_t sense_count() const { return senses_.size(); }
  std::size_t word_count() const { return offsets_.size() - 1; }
  const WordSense& sense(NodeId s) const { return senses_[s]; }
  std::span<const WordSense> senses_of(NodeId word) const;
  /// Dense id of sense (word, index).
  NodeId sense_node(NodeId word, std::uint32_t index) const;

 private:
  std::vector<WordSense> senses_;
  std::vector<NodeId> offsets_;  // word -> first sense id; size word_count+1
};

/// Disambiguated contexts, indexed by sense id; each entry maps sense ids
/// of the context words to the original context weights.
using SenseContexts = std::vector<std::vector<Neighbor>>;

/// Word sense induction for one word: the clusters of its ego network
/// become its senses, ordered by (size desc, smallest member asc) so the
/// indices are stable. An empty ego network yields one sense with an empty
/// context.
std::vector<WordSense> induce_senses(const Graph& g, NodeId word,
                                     const ClustererSpec& local);

/// Runs induce_senses over every node, optionally across threads.
SenseInventory induce_inventory(const Graph& g, const ClustererSpec& local,
                                unsigned threads = 1);

/// Replaces each word of ctx(s) by that word's sense whose context is most
/// cosine-similar to ctx(s). Contexts are compared as sparse vectors over
/// the word vocabulary; ctx(s) is augmented with the sense's own word at
/// the maximal context weight so candidate senses mentioning it are
/// favored. Ties (including all-zero similarities) go to the lowest sense
/// index.
std::vector<Neighbor> disambiguate_context(const SenseInventory& inventory,
                                           NodeId sense);

SenseContexts disambiguate_all(const SenseInventory& inventory,
                               unsigned threads = 1);

/// Assembles the sense graph: one node per sense, an undirected edge
/// (s, t) for every t in the disambiguated context of s. When the two
/// directions disagree on the weight the maximum wins.
/// Throws InconsistentInventory when `contexts` does not match the
/// inventory (wrong size, dangling sense ids, or senses of words that are
/// not in the source context).
Graph build_sense_graph(const SenseInventory& inventory,
                        const SenseContexts& contexts);

struct WatsetParams {
  ClustererSpec local;
  ClustererSpec global;
  unsigned threads = 1;
};

struct WatsetResult {
  SenseInventory inventory;
  Graph sense_graph;
  Clusters sense_clusters;  // over sense ids
  Clusters word_clusters;   // sense labels dropped, deduplicated per cluster
};

/// The full local-global pipeline: sense induction, context
/// disambiguation, sense graph construction, global clustering, label
/// drop. The word clusters may overlap: a polysemous word lands in one
/// cluster per sense.
/// Throws EmptyInput on an empty graph.
WatsetResult run_watset(const Graph& g, const WatsetParams& params);

inline WatsetResult run_watset(const WordGraph& g,
                               const WatsetParams& params) {
  return run_watset(g.graph(), params);
}

}  // namespace watset
