#include "word_graph.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "error.hpp"

namespace watset {

std::optional<NodeId> WordGraph::find(std::string_view word) const {
  auto it = std::lower_bound(words_.begin(), words_.end(), word);
  if (it == words_.end() || *it != word) return std::nullopt;
  return static_cast<NodeId>(it - words_.begin());
}

NodeId WordGraph::require(std::string_view word) const {
  if (auto id = find(word)) return *id;
  throw Error(ErrorCode::UnknownWord, "unknown word: " + std::string(word));
}

WordGraph build_graph(std::span<const SynonymPair> pairs, Weighting scheme,
                      const VectorStore* vectors) {
  if (pairs.empty()) {
    throw Error(ErrorCode::EmptyInput, "no synonymy pairs given");
  }
  if (scheme == Weighting::Sim && vectors == nullptr) {
    throw Error(ErrorCode::MissingEmbeddings,
                "sim weighting needs a vector store");
  }

  std::vector<std::string> words;
  words.reserve(pairs.size() * 2);
  for (const SynonymPair& pair : pairs) {
    words.push_back(pair.first);
    words.push_back(pair.second);
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  auto id_of = [&words](const std::string& word) {
    auto it = std::lower_bound(words.begin(), words.end(), word);
    return static_cast<NodeId>(it - words.begin());
  };

  struct PairStats {
    std::size_t count = 0;
    std::optional<double> explicit_weight;
  };
  std::map<std::pair<NodeId, NodeId>, PairStats> stats;
  for (const SynonymPair& pair : pairs) {
    if (pair.first == pair.second) continue;
    auto& entry = stats[std::minmax(id_of(pair.first), id_of(pair.second))];
    ++entry.count;
    if (pair.weight) {
      entry.explicit_weight = entry.explicit_weight
                                  ? std::max(*entry.explicit_weight,
                                             *pair.weight)
                                  : *pair.weight;
    }
  }

  Graph graph(words.size());
  for (const auto& [edge, entry] : stats) {
    double weight;
    if (entry.explicit_weight) {
      weight = *entry.explicit_weight;
    } else {
      switch (scheme) {
        case Weighting::Ones:
          weight = 1.0;
          break;
        case Weighting::Count:
          weight = static_cast<double>(entry.count);
          break;
        case Weighting::Sim: {
          auto cos = vectors->cosine(words[edge.first], words[edge.second]);
          weight = (cos && *cos > 0.0) ? *cos : kEpsilonWeight;
          break;
        }
      }
    }
    graph.set_edge(edge.first, edge.second, weight);
  }

  return WordGraph(std::move(words), std::move(graph));
}

EgoNetwork ego_network(const WordGraph& g, std::string_view word) {
  return ego_network(g.graph(), g.require(word));
}

}  // namespace watset
