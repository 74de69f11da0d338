#include "chinese_whispers.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "error.hpp"
#include "random.hpp"

namespace watset {

namespace {

double influence(const Graph& g, const Neighbor& nb, ChineseWhispersMode mode) {
  switch (mode) {
    case ChineseWhispersMode::Top:
      return nb.weight;
    case ChineseWhispersMode::NoLog:
      return nb.weight / static_cast<double>(g.degree(nb.node));
    case ChineseWhispersMode::Log:
      return nb.weight / std::log(1.0 + static_cast<double>(g.degree(nb.node)));
  }
  return nb.weight;
}

}  // namespace

NodeId chinese_whispers_vote(const Graph& g, std::span<const NodeId> labels,
                             NodeId node, ChineseWhispersMode mode) {
  const auto neighbors = g.neighbors(node);
  if (neighbors.empty()) return labels[node];

  struct Score {
    double total = 0.0;
    NodeId first_carrier;  // smallest neighbor carrying the label
  };
  std::map<NodeId, Score> scores;
  for (const Neighbor& nb : neighbors) {  // ascending by node id
    auto [it, inserted] = scores.try_emplace(labels[nb.node], Score{0.0, nb.node});
    it->second.total += influence(g, nb, mode);
  }

  auto best = scores.begin();
  for (auto it = std::next(scores.begin()); it != scores.end(); ++it) {
    if (it->second.total > best->second.total ||
        (it->second.total == best->second.total &&
         it->second.first_carrier < best->second.first_carrier)) {
      best = it;
    }
  }
  return best->first;
}

Clusters chinese_whispers(const Graph& g,
                          const ChineseWhispersParams& params) {
  if (params.max_iterations < 1) {
    throw Error(ErrorCode::InvalidArgument, "max_iterations must be >= 1");
  }
  const std::size_t n = g.node_count();
  std::vector<NodeId> labels(n);
  std::iota(labels.begin(), labels.end(), NodeId{0});

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::mt19937_64 rng(params.seed);

  for (unsigned iteration = 0; iteration < params.max_iterations;
       ++iteration) {
    shuffle(order, rng);
    bool changed = false;
    for (NodeId node : order) {
      NodeId vote = chinese_whispers_vote(g, labels, node, params.mode);
      if (vote != labels[node]) {
        labels[node] = vote;
        changed = true;
      }
    }
    if (!changed) break;
  }
  return clusters_from_labels(labels);
}

Clusters clusters_from_labels(std::span<const NodeId> labels) {
  std::map<NodeId, std::vector<NodeId>> groups;
  for (std::size_t node = 0; node < labels.size(); ++node) {
    groups[labels[node]].push_back(static_cast<NodeId>(node));
  }
  Clusters clusters;
  clusters.reserve(groups.size());
  for (auto& [label, members] : groups) clusters.push_back(std::move(members));
  std::sort(clusters.begin(), clusters.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return clusters;
}

}  // namespace watset
