#include "vectors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "error.hpp"

namespace watset {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_double(std::string_view text, double& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_size(std::string_view text, std::size_t& out) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

VectorStore VectorStore::read_text(std::istream& in) {
  VectorStore store;
  std::string line;
  std::size_t line_number = 0;
  bool saw_content = false;

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!saw_content) {
      saw_content = true;
      // A `<count> <dim>` header is two bare integers.
      std::size_t count, dim;
      if (fields.size() == 2 && parse_size(fields[0], count) &&
          parse_size(fields[1], dim)) {
        if (dim == 0) {
          throw Error(ErrorCode::FormatError,
                      "vector header declares dimension 0");
        }
        store.dimension_ = dim;
        continue;
      }
    }

    if (fields.size() < 2) {
      throw Error(ErrorCode::FormatError,
                  "line " + std::to_string(line_number) +
                      ": expected `word v1 ... vdim`");
    }
    if (store.dimension_ == 0) {
      store.dimension_ = fields.size() - 1;
    } else if (fields.size() - 1 != store.dimension_) {
      throw Error(ErrorCode::FormatError,
                  "line " + std::to_string(line_number) + ": expected " +
                      std::to_string(store.dimension_) + " components, got " +
                      std::to_string(fields.size() - 1));
    }

    std::vector<double> row(store.dimension_);
    for (std::size_t i = 0; i < store.dimension_; ++i) {
      if (!parse_double(fields[i + 1], row[i])) {
        throw Error(ErrorCode::FormatError,
                    "line " + std::to_string(line_number) +
                        ": bad vector component `" + std::string(fields[i + 1]) +
                        '`');
      }
    }

    std::string word(fields[0]);
    auto [it, inserted] =
        store.rows_.try_emplace(std::move(word), store.norms_.size());
    if (inserted) {
      store.values_.insert(store.values_.end(), row.begin(), row.end());
      store.norms_.push_back(0.0);
    } else {
      std::copy(row.begin(), row.end(),
                store.values_.begin() +
                    static_cast<std::ptrdiff_t>(it->second * store.dimension_));
    }
  }

  if (store.norms_.empty()) {
    throw Error(ErrorCode::EmptyInput, "vector stream holds no vectors");
  }
  for (std::size_t r = 0; r < store.norms_.size(); ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < store.dimension_; ++i) {
      double v = store.values_[r * store.dimension_ + i];
      sum += v * v;
    }
    store.norms_[r] = std::sqrt(sum);
  }
  return store;
}

VectorStore VectorStore::read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open vector file: " + path);
  }
  return read_text(in);
}

std::size_t VectorStore::row_of(std::string_view word) const {
  auto it = rows_.find(word);
  return it == rows_.end() ? size() : it->second;
}

bool VectorStore::contains(std::string_view word) const {
  return row_of(word) != size();
}

std::optional<std::span<const double>> VectorStore::find(
    std::string_view word) const {
  std::size_t row = row_of(word);
  if (row == size()) return std::nullopt;
  return std::span<const double>(values_.data() + row * dimension_,
                                 dimension_);
}

std::optional<double> VectorStore::cosine(std::string_view u,
                                          std::string_view v) const {
  std::size_t ru = row_of(u);
  std::size_t rv = row_of(v);
  if (ru == size() || rv == size()) return std::nullopt;
  if (norms_[ru] == 0.0 || norms_[rv] == 0.0) return std::nullopt;

  const double* a = values_.data() + ru * dimension_;
  const double* b = values_.data() + rv * dimension_;
  double dot = 0.0;
  for (std::size_t i = 0; i < dimension_; ++i) dot += a[i] * b[i];
  double value = dot / (norms_[ru] * norms_[rv]);
  return std::clamp(value, -1.0, 1.0);
}

}  // namespace watset
