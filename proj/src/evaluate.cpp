#include "evaluate.hpp"

#include <algorithm>

#include "error.hpp"

namespace watset {

namespace {

std::vector<std::string> distinct_members(const std::vector<std::string>& synset) {
  std::vector<std::string> members = synset;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

void insert_pairs(const std::vector<std::string>& sorted_members,
                  std::set<WordPair>& out) {
  for (std::size_t i = 0; i < sorted_members.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted_members.size(); ++j) {
      out.emplace(sorted_members[i], sorted_members[j]);
    }
  }
}

}  // namespace

std::set<WordPair> expand_pairs(const Synsets& synsets) {
  std::set<WordPair> pairs;
  for (const auto& synset : synsets) {
    insert_pairs(distinct_members(synset), pairs);
  }
  return pairs;
}

EvalReport paired_prf(const Synsets& predicted, const Synsets& gold,
                      std::optional<std::size_t> prune_threshold) {
  if (gold.empty()) {
    throw Error(ErrorCode::EmptyGold, "gold synset file is empty");
  }

  EvalReport report;
  std::set<WordPair> predicted_pairs;
  for (const auto& synset : predicted) {
    auto members = distinct_members(synset);
    if (prune_threshold && members.size() >= *prune_threshold) {
      ++report.pruned_clusters;
      continue;
    }
    insert_pairs(members, predicted_pairs);
  }
  std::set<WordPair> gold_pairs = expand_pairs(gold);

  for (const WordPair& pair : predicted_pairs) {
    if (gold_pairs.count(pair) > 0) ++report.true_positive_pairs;
  }
  report.predicted_pairs = predicted_pairs.size();
  report.gold_pairs = gold_pairs.size();
  report.precision =
      report.predicted_pairs > 0
          ? static_cast<double>(report.true_positive_pairs) /
                static_cast<double>(report.predicted_pairs)
          : 0.0;
  report.recall = report.gold_pairs > 0
                      ? static_cast<double>(report.true_positive_pairs) /
                            static_cast<double>(report.gold_pairs)
                      : 0.0;
  report.f1 = (report.precision + report.recall) > 0.0
                  ? 2.0 * report.precision * report.recall /
                        (report.precision + report.recall)
                  : 0.0;
  return report;
}

EvalReport cross_evaluate(const Synsets& resource_a,
                          const Synsets& resource_b) {
  return paired_prf(resource_a, resource_b, std::nullopt);
}

}  // namespace watset
