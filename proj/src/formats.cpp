#include "formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "error.hpp"

namespace watset::io {

std::string format_weight(double value) {
  char buffer[32];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

[[noreturn]] void bad_line(std::size_t line_number, const std::string& what) {
  throw Error(ErrorCode::FormatError,
              "line " + std::to_string(line_number) + ": " + what);
}

}  // namespace

std::vector<SynonymPair> read_pair_list(std::istream& in) {
  std::vector<SynonymPair> pairs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      bad_line(line_number, "expected `word1<TAB>word2[<TAB>weight]`");
    }
    if (fields[0].empty() || fields[1].empty()) {
      bad_line(line_number, "empty word field");
    }
    SynonymPair pair{std::move(fields[0]), std::move(fields[1]), std::nullopt};
    if (fields.size() == 3) {
      double weight;
      const char* begin = fields[2].data();
      const char* end = begin + fields[2].size();
      auto [ptr, ec] = std::from_chars(begin, end, weight);
      if (ec != std::errc() || ptr != end || !(weight > 0.0)) {
        bad_line(line_number, "weight must be a positive number, got `" +
                                  fields[2] + '`');
      }
      pair.weight = weight;
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<SynonymPair> read_pair_list_file(const std::string& path) {
  if (path == "-") return read_pair_list(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open pair list: " + path);
  return read_pair_list(in);
}

WordGraph read_word_graph_file(const std::string& path, Weighting scheme,
                               const VectorStore* vectors) {
  auto pairs = read_pair_list_file(path);
  return build_graph(pairs, scheme, vectors);
}

void write_edge_list(std::ostream& out, const WordGraph& g) {
  for (NodeId u = 0; u < g.word_count(); ++u) {
    for (const Neighbor& nb : g.graph().neighbors(u)) {
      if (nb.node <= u) continue;
      out << g.word(u) << '\t' << g.word(nb.node) << '\t'
          << format_weight(nb.weight) << '\n';
    }
  }
}

Synsets read_synsets(std::istream& in) {
  Synsets synsets;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto members = split_tabs(line);
    for (const auto& member : members) {
      if (member.empty()) bad_line(line_number, "empty synset member");
    }
    synsets.push_back(std::move(members));
  }
  return synsets;
}

Synsets read_synsets_file(const std::string& path) {
  if (path == "-") return read_synsets(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open synset file: " + path);
  return read_synsets(in);
}

void write_synsets(std::ostream& out, const Synsets& synsets) {
  for (const auto& synset : synsets) {
    for (std::size_t i = 0; i < synset.size(); ++i) {
      if (i > 0) out << '\t';
      out << synset[i];
    }
    out << '\n';
  }
}

Synsets to_synsets(const WordGraph& g, const Clusters& clusters) {
  Synsets synsets;
  synsets.reserve(clusters.size());
  for (const auto& cluster : clusters) {
    std::vector<std::string> synset;
    synset.reserve(cluster.size());
    for (NodeId node : cluster) synset.push_back(g.word(node));
    synsets.push_back(std::move(synset));
  }
  return synsets;
}

Synsets to_labeled_synsets(const WordGraph& g, const SenseInventory& inventory,
                           const Clusters& sense_clusters) {
  Synsets synsets;
  synsets.reserve(sense_clusters.size());
  for (const auto& cluster : sense_clusters) {
    std::vector<std::string> synset;
    synset.reserve(cluster.size());
    for (NodeId s : cluster) {
      const WordSense& sense = inventory.sense(s);
      synset.push_back(g.word(sense.word) + '#' + std::to_string(sense.index));
    }
    synsets.push_back(std::move(synset));
  }
  return synsets;
}

Synsets canonical_synsets(Synsets synsets) {
  for (auto& synset : synsets) std::sort(synset.begin(), synset.end());
  std::sort(synsets.begin(), synsets.end(),
            [](const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  return synsets;
}

void write_sense_inventory(std::ostream& out, const WordGraph& g,
                           const SenseInventory& inventory) {
  for (NodeId s = 0; s < inventory.sense_count(); ++s) {
    const WordSense& sense = inventory.sense(s);
    out << g.word(sense.word) << '\t' << sense.index << '\t';
    for (std::size_t i = 0; i < sense.context.size(); ++i) {
      if (i > 0) out << ',';
      out << g.word(sense.context[i].node) << ':'
          << format_weight(sense.context[i].weight);
    }
    out << '\n';
  }
}

void write_sense_graph(std::ostream& out, const WordGraph& g,
                       const SenseInventory& inventory,
                       const Graph& sense_graph) {
  auto label = [&](NodeId s) {
    const WordSense& sense = inventory.sense(s);
    return g.word(sense.word) + '#' + std::to_string(sense.index);
  };
  for (NodeId s = 0; s < sense_graph.node_count(); ++s) {
    for (const Neighbor& nb : sense_graph.neighbors(s)) {
      if (nb.node <= s) continue;
      out << label(s) << '\t' << label(nb.node) << '\t'
          << format_weight(nb.weight) << '\n';
    }
  }
}

OutputFile::OutputFile(const std::string& path) {
  if (path == "-") {
    out_ = &std::cout;
    return;
  }
  file_ = std::make_unique<std::ofstream>(path);
  if (!*file_) {
    throw Error(ErrorCode::IoError, "cannot open output file: " + path);
  }
  out_ = file_.get();
}

OutputFile::~OutputFile() = default;

void OutputFile::finish(const std::string& path) {
  out_->flush();
  if (!*out_) {
    throw Error(ErrorCode::IoError, "failed writing output: " + path);
  }
}

}  // namespace watset::io
