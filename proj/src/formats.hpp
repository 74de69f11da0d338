#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "evaluate.hpp"
#include "graph.hpp"
#include "watset.hpp"
#include "word_graph.hpp"

namespace watset::io {

/// Shortest decimal form that round-trips the value.
std::string format_weight(double value);

/// Pair list: `word1<TAB>word2[<TAB>weight]` per line, UTF-8. Lines
/// starting with `#` and blank lines are skipped. A third column must be a
/// positive number and overrides the weighting scheme for that pair.
/// Throws FormatError on malformed lines.
std::vector<SynonymPair> read_pair_list(std::istream& in);
std::vector<SynonymPair> read_pair_list_file(const std::string& path);

WordGraph read_word_graph_file(const std::string& path, Weighting scheme,
                               const VectorStore* vectors = nullptr);

/// Edge list: `word1<TAB>word2<TAB>weight`, endpoints in lexicographic
/// order, lines sorted. Readable back as a pair list with explicit weights.
void write_edge_list(std::ostream& out, const WordGraph& g);

/// Synset file: one synset per line, members tab-separated.
Synsets read_synsets(std::istream& in);
Synsets read_synsets_file(const std::string& path);
void write_synsets(std::ostream& out, const Synsets& synsets);

/// Maps id clusters onto words.
Synsets to_synsets(const WordGraph& g, const Clusters& clusters);
/// Sense-labeled variant: members come out as `word#index`.
Synsets to_labeled_synsets(const WordGraph& g, const SenseInventory& inventory,
                           const Clusters& sense_clusters);

/// Members ascending; synsets by (size desc, then members lexicographic).
/// Output files are byte-identical for identical clusterings.
Synsets canonical_synsets(Synsets synsets);

/// Sense inventory dump: `word<TAB>index<TAB>ctx-word:weight,...` per sense.
void write_sense_inventory(std::ostream& out, const WordGraph& g,
                           const SenseInventory& inventory);

/// Sense graph dump: `word#index<TAB>word#index<TAB>weight` per edge,
/// endpoints ordered, lines sorted.
void write_sense_graph(std::ostream& out, const WordGraph& g,
                       const SenseInventory& inventory,
                       const Graph& sense_graph);

/// Output writer; the path `-` selects stdout.
class OutputFile {
 public:
  explicit OutputFile(const std::string& path);
  ~OutputFile();
  std::ostream& stream() { return *out_; }
  /// Throws IoError when the stream went bad.
  void finish(const std::string& path);

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_;
};

}  // namespace watset::io
