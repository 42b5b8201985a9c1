// Copyright 2026 The sdgtag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDGTAG_FOSTAG_HPP_
#define SDGTAG_FOSTAG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sdgtag/textprep.hpp"

namespace sdgtag {

class FosCatalog;

// Name plus description text for one Field of Study.
struct FosDocument {
  std::string fos_id;
  std::string text;
};

// JSON Lines, one {"fos_id": string, "text": string} per line. Blank lines
// are skipped; anything else malformed raises ParseError with the line.
std::vector<FosDocument> parse_fos_corpus(std::string_view jsonl);
std::vector<FosDocument> load_fos_corpus(const std::filesystem::path& path);

// Nonnegative sparse vector keyed by vocabulary index. Entries are sorted by
// index, never store a zero, and norm() is the Euclidean norm of the
// stored weights.
class SparseVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  SparseVector() = default;
  // Sorts, merges duplicate indices, drops zeros. Throws std::invalid_argument
  // on a negative or non-finite weight.
  static SparseVector from_entries(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  double norm() const noexcept { return norm_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t nnz() const noexcept { return entries_.size(); }

  // Scaled to unit norm; the zero vector stays zero.
  SparseVector normalized() const;

  // Sum of products over shared indices, accumulated in ascending index
  // order starting from 0.0.
  double dot(const SparseVector& other) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
  double norm_ = 0.0;
};

// dot(u, v) / (|u| |v|), clamped to [0, 1]; 0.0 if either vector is zero.
double cosine_similarity(const SparseVector& u, const SparseVector& v);

struct FosTag {
  std::string fos_id;
  double similarity;

  friend bool operator==(const FosTag&, const FosTag&) = default;
};

struct TagOptions {
  std::size_t top_k = 20;
  double min_sim = 0.1;
};

// Per-FOS TF-IDF vectors. Weights are raw term counts times the smoothed
// idf ln((1 + N) / (1 + df)) + 1, then L2-normalized. The vocabulary is in
// lexicographic (byte) order and FOS entries in fos_id order, so an index
// built from any permutation of the same documents is identical.
// Immutable after construction and safe to share between threads.
class FosIndex {
 public:
  // Throws EmptyCorpusError on no documents, DuplicateFosError on a
  // repeated fos_id, ParseError on an empty fos_id or empty text.
  static FosIndex build(std::vector<FosDocument> docs, TokenizerConfig tokenizer = {});

  std::size_t size() const noexcept { return fos_ids_.size(); }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  const std::vector<std::string>& fos_ids() const noexcept { return fos_ids_; }
  const std::vector<SparseVector>& vectors() const noexcept { return vectors_; }
  const SparseVector* vector_for(std::string_view fos_id) const;
  std::optional<std::uint32_t> term_index(std::string_view term) const;
  const TokenizerConfig& tokenizer() const noexcept { return tokenizer_; }
  std::string build_config() const { return tokenizer_.digest(); }

  // Unit-norm TF-IDF vector of `text`; out-of-vocabulary tokens are
  // ignored, and text without known tokens gives the zero vector.
  SparseVector vectorize(std::string_view text) const;

  // Scores every FOS sharing a term with `query` through the inverted
  // lists and keeps the best top_k with similarity >= min_sim, ordered by
  // similarity descending then fos_id ascending.
  std::vector<FosTag> tag(const SparseVector& query, const TagOptions& options) const;
  std::vector<FosTag> tag(std::string_view text, const TagOptions& options) const;

  // Throws ParseError naming the first fos_id missing from the catalog.
  void check_against(const FosCatalog& catalog) const;

  // Versioned JSON snapshot (vocabulary, idf, vectors, build_config).
  nlohmann::ordered_json to_json() const;
  void save(const std::filesystem::path& path) const;
  // Throws ConfigError if the snapshot's build_config differs from
  // `tokenizer`'s digest; ParseError if malformed.
  static FosIndex from_json(const nlohmann::json& doc, TokenizerConfig tokenizer = {});
  static FosIndex load(const std::filesystem::path& path, TokenizerConfig tokenizer = {});

 private:
  struct Posting {
    std::uint32_t fos;
    double weight;
  };

  FosIndex() = default;
  void build_postings();
  SparseVector weigh(const std::vector<std::uint32_t>& term_ids) const;

  TokenizerConfig tokenizer_;
  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, std::uint32_t> term_ids_;
  std::vector<double> idf_;
  std::vector<std::string> fos_ids_;
  std::vector<SparseVector> vectors_;
  std::vector<std::vector<Posting>> postings_;  // per term, ascending fos
};

SparseVector vectorize_text(std::string_view text, const FosIndex& index);
std::vector<FosTag> tag_fos(std::string_view text, const FosIndex& index,
                            const TagOptions& options = {});

}  // namespace sdgtag

#endif  // SDGTAG_FOSTAG_HPP_
