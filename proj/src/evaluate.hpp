#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace watset {

/// Synsets as plain word sets; order-free, overlaps allowed.
using Synsets = std::vector<std::vector<std::string>>;

/// Unordered word pair stored canonically (first < second).
using WordPair = std::pair<std::string, std::string>;

/// Clusters of at least this many words are dropped before evaluation by
/// default; they hardly represent meaningful synsets.
inline constexpr std::size_t kDefaultPruneThreshold = 150;

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::uint64_t predicted_pairs = 0;
  std::uint64_t gold_pairs = 0;
  std::uint64_t true_positive_pairs = 0;
  std::uint64_t pruned_clusters = 0;
};

/// Every unordered pair of distinct members across all synsets (a synset
/// of n distinct words yields n(n-1)/2 pairs); duplicates collapse.
std::set<WordPair> expand_pairs(const Synsets& synsets);

/// Paired precision/recall/F1: the overlap of the binary synonymy pairs
/// expanded from the predicted and gold synsets. Predicted clusters whose
/// distinct-word count reaches the prune threshold are removed first
/// (nullopt disables pruning); gold is never pruned.
/// Throws EmptyGold when gold has no synsets.
EvalReport paired_prf(
    const Synsets& predicted, const Synsets& gold,
    std::optional<std::size_t> prune_threshold = kDefaultPruneThreshold);

/// Resource-vs-resource comparison: paired_prf without pruning.
EvalReport cross_evaluate(const Synsets& resource_a, const Synsets& resource_b);

}  // namespace watset
