#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "vectors.hpp"

namespace watset {

/// One line of a synonymy dictionary. A pre-supplied weight overrides the
/// weighting scheme for its pair.
struct SynonymPair {
  std::string first;
  std::string second;
  std::optional<double> weight;
};

enum class Weighting {
  Ones,   // constant weight 1
  Count,  // number of occurrences of the unordered pair
  Sim,    // cosine similarity of the two words' vectors
};

/// Fallback weight for sim edges whose cosine is non-positive or whose
/// words have no usable vector; also the floor for perturbed weights.
inline constexpr double kEpsilonWeight = 1e-6;

/// Undirected weighted graph over words. Nodes are stored sorted, so node
/// ids follow the lexicographic order of the words. Immutable once built.
class WordGraph {
 public:
  WordGraph() = default;
  WordGraph(std::vector<std::string> sorted_words, Graph graph)
      : words_(std::move(sorted_words)), graph_(std::move(graph)) {}

  const Graph& graph() const { return graph_; }
  const std::vector<std::string>& words() const { return words_; }
  std::size_t word_count() const { return words_.size(); }

  const std::string& word(NodeId id) const { return words_[id]; }
  std::optional<NodeId> find(std::string_view word) const;
  /// Throws UnknownWord when the word is not a node.
  NodeId require(std::string_view word) const;

  bool operator==(const WordGraph&) const = default;

 private:
  std::vector<std::string> words_;
  Graph graph_;
};

/// Builds the synonymy graph from a pair list. Self-pairs are dropped;
/// parallel duplicates collapse by the scheme (ones: idempotent, count:
/// summed multiplicity, sim: recomputed). Pairs carrying an explicit weight
/// use it instead (maximum across duplicates).
/// Throws EmptyInput when no pairs are given, MissingEmbeddings when
/// scheme is Sim and vectors is null.
WordGraph build_graph(std::span<const SynonymPair> pairs, Weighting scheme,
                      const VectorStore* vectors = nullptr);

/// Ego network of `word`, ego removed. Throws UnknownWord.
EgoNetwork ego_network(const WordGraph& g, std::string_view word);

}  // namespace watset
