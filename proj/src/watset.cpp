#include "watset.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace watset {

SenseInventory::SenseInventory(std::vector<WordSense> senses,
                               std::size_t word_count)
    : senses_(std::move(senses)) {
  offsets_.assign(word_count + 1, 0);
  std::size_t s = 0;
  for (NodeId word = 0; word < word_count; ++word) {
    offsets_[word] = static_cast<NodeId>(s);
    std::uint32_t index = 0;
    while (s < senses_.size() && senses_[s].word == word) {
      if (senses_[s].index != index) {
        throw Error(ErrorCode::InconsistentInventory,
                    "senses of word " + std::to_string(word) +
                        " are not numbered 0,1,...");
      }
      for (const Neighbor& entry : senses_[s].context) {
        if (entry.node == word) {
          throw Error(ErrorCode::InconsistentInventory,
                      "ctx of a sense of word " + std::to_string(word) +
                          " contains the word itself");
        }
      }
      if (!std::is_sorted(senses_[s].context.begin(), senses_[s].context.end(),
                          [](const Neighbor& a, const Neighbor& b) {
                            return a.node < b.node;
                          })) {
        throw Error(ErrorCode::InconsistentInventory,
                    "ctx entries must be sorted by word id");
      }
      ++index;
      ++s;
    }
    if (index == 0) {
      throw Error(ErrorCode::InconsistentInventory,
                  "word " + std::to_string(word) + " has no sense");
    }
  }
  if (s != senses_.size()) {
    throw Error(ErrorCode::InconsistentInventory,
                "senses are not grouped by ascending word id");
  }
  offsets_[word_count] = static_cast<NodeId>(senses_.size());
}

std::span<const WordSense> SenseInventory::senses_of(NodeId word) const {
  return {senses_.data() + offsets_[word],
          senses_.data() + offsets_[word + 1]};
}

NodeId SenseInventory::sense_node(NodeId word, std::uint32_t index) const {
  return offsets_[word] + index;
}

std::vector<WordSense> induce_senses(const Graph& g, NodeId word,
                                     const ClustererSpec& local) {
  EgoNetwork ego = ego_network(g, word);
  std::vector<WordSense> senses;
  if (ego.members.empty()) {
    senses.push_back(WordSense{word, 0, {}});
    return senses;
  }

  Clusters clusters = run_clusterer(ego.graph, local);
  // stable sense numbering: larger clusters first, then smallest member
  std::sort(clusters.begin(), clusters.end(),
            [&](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return ego.members[a.front()] < ego.members[b.front()];
            });

  senses.reserve(clusters.size());
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    WordSense sense{word, static_cast<std::uint32_t>(i), {}};
    sense.context.reserve(clusters[i].size());
    for (NodeId local_id : clusters[i]) {
      NodeId alter = ego.members[local_id];
      sense.context.push_back(Neighbor{alter, *g.weight(word, alter)});
    }
    senses.push_back(std::move(sense));
  }
  return senses;
}

SenseInventory induce_inventory(const Graph& g, const ClustererSpec& local,
                                unsigned threads) {
  std::vector<std::vector<WordSense>> per_word(g.node_count());
  parallel_for(g.node_count(), threads, [&](std::size_t word) {
    per_word[word] = induce_senses(g, static_cast<NodeId>(word), local);
  });

  std::vector<WordSense> senses;
  for (auto& word_senses : per_word) {
    for (auto& sense : word_senses) senses.push_back(std::move(sense));
  }
  return SenseInventory(std::move(senses), g.node_count());
}

namespace {

double sparse_dot(std::span<const Neighbor> a, std::span<const Neighbor> b) {
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (a[i].node > b[j].node) {
      ++j;
    } else {
      dot += a[i].weight * b[j].weight;
      ++i;
      ++j;
    }
  }
  return dot;
}

double norm(std::span<const Neighbor> v) {
  double sum = 0.0;
  for (const Neighbor& entry : v) sum += entry.weight * entry.weight;
  return std::sqrt(sum);
}

}  // namespace

std::vector<Neighbor> disambiguate_context(const SenseInventory& inventory,
                                           NodeId sense_id) {
  const WordSense& sense = inventory.sense(sense_id);

  // ctx(s) plus the sense's own word at the maximal context weight
  std::vector<Neighbor> augmented = sense.context;
  double max_weight = 0.0;
  for (const Neighbor& entry : sense.context) {
    max_weight = std::max(max_weight, entry.weight);
  }
  auto it = std::lower_bound(
      augmented.begin(), augmented.end(), sense.word,
      [](const Neighbor& n, NodeId id) { return n.node < id; });
  augmented.insert(it, Neighbor{sense.word, max_weight > 0 ? max_weight : 1.0});
  const double augmented_norm = norm(augmented);

  std::vector<Neighbor> disambiguated;
  disambiguated.reserve(sense.context.size());
  for (const Neighbor& entry : sense.context) {
    const auto candidates = inventory.senses_of(entry.node);
    std::uint32_t best_index = 0;
    if (candidates.size() > 1) {
      double best_similarity = -1.0;
      for (std::uint32_t i = 0; i < candidates.size(); ++i) {
        double candidate_norm = norm(candidates[i].context);
        double denom = augmented_norm * candidate_norm;
        double similarity =
            denom > 0.0 ? sparse_dot(augmented, candidates[i].context) / denom
                        : 0.0;
        if (similarity > best_similarity) {
          best_similarity = similarity;
          best_index = i;
        }
      }
    }
    disambiguated.push_back(
        Neighbor{inventory.sense_node(entry.node, best_index), entry.weight});
  }
  return disambiguated;
}

SenseContexts disambiguate_all(const SenseInventory& inventory,
                               unsigned threads) {
  SenseContexts contexts(inventory.sense_count());
  parallel_for(inventory.sense_count(), threads, [&](std::size_t s) {
    contexts[s] = disambiguate_context(inventory, static_cast<NodeId>(s));
  });
  return contexts;
}

Graph build_sense_graph(const SenseInventory& inventory,
                        const SenseContexts& contexts) {
  if (contexts.size() != inventory.sense_count()) {
    throw Error(ErrorCode::InconsistentInventory,
                "disambiguated contexts do not cover the inventory");
  }
  Graph graph(inventory.sense_count());
  for (NodeId s = 0; s < contexts.size(); ++s) {
    const WordSense& source = inventory.sense(s);
    for (const Neighbor& target : contexts[s]) {
      if (target.node >= inventory.sense_count()) {
        throw Error(ErrorCode::InconsistentInventory,
                    "dangling sense id " + std::to_string(target.node));
      }
      NodeId target_word = inventory.sense(target.node).word;
      bool in_source_context = std::any_of(
          source.context.begin(), source.context.end(),
          [&](const Neighbor& entry) { return entry.node == target_word; });
      if (!in_source_context) {
        throw Error(ErrorCode::InconsistentInventory,
                    "disambiguated context of sense " + std::to_string(s) +
                        " names a word outside ctx");
      }
      graph.merge_edge_max(s, target.node, target.weight);
    }
  }
  return graph;
}

WatsetResult run_watset(const Graph& g, const WatsetParams& params) {
  if (g.node_count() == 0) {
    throw Error(ErrorCode::EmptyInput, "watset on empty graph");
  }
  WatsetResult result;
  result.inventory = induce_inventory(g, params.local, params.threads);
  SenseContexts contexts =
      disambiguate_all(result.inventory, params.threads);
  result.sense_graph = build_sense_graph(result.inventory, contexts);
  result.sense_clusters = run_clusterer(result.sense_graph, params.global);

  result.word_clusters.reserve(result.sense_clusters.size());
  for (const auto& cluster : result.sense_clusters) {
    std::vector<NodeId> words;
    words.reserve(cluster.size());
    for (NodeId s : cluster) words.push_back(result.inventory.sense(s).word);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    result.word_clusters.push_back(std::move(words));
  }
  return result;
}

}  // namespace watset
