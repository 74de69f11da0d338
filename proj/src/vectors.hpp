#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace watset {

/// Dense word vectors loaded from the plain-text format: an optional
/// `<count> <dim>` header line followed by `word v1 v2 ... vdim` lines.
/// Immutable after loading; concurrent reads are safe.
class VectorStore {
 public:
  /// Throws FormatError on inconsistent dimensions or unparseable
  /// components, EmptyInput when the stream holds no vectors.
  static VectorStore read_text(std::istream& in);
  static VectorStore read_text_file(const std::string& path);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return norms_.size(); }
  bool contains(std::string_view word) const;
  std::optional<std::span<const double>> find(std::string_view word) const;

  /// Cosine similarity in [-1, 1]; absent when either word is unknown or
  /// has a zero-norm vector.
  std::optional<double> cosine(std::string_view u, std::string_view v) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::size_t row_of(std::string_view word) const;  // size() when absent

  std::size_t dimension_ = 0;
  std::vector<double> values_;  // size() * dimension_, row-major
  std::vector<double> norms_;
  std::unordered_map<std::string, std::size_t, StringHash, std::equal_to<>>
      rows_;
};

}  // namespace watset
