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

#ifndef SDGTAG_TEXTPREP_HPP_
#define SDGTAG_TEXTPREP_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace sdgtag {

// A cleaned key-term: NFKC case-folded, edge punctuation stripped from each
// word, single-space separated, never empty. Only normalize_term creates
// one from raw text, so holding a NormalizedTerm is proof of the invariants.
class NormalizedTerm {
 public:
  const std::string& str() const noexcept { return value_; }
  operator std::string_view() const noexcept { return value_; }

  // Wraps a string that is already normalized. Throws EmptyTermError if
  // `value` is not a fixed point of normalize_term.
  static NormalizedTerm from_normalized(std::string value);

  friend bool operator==(const NormalizedTerm&, const NormalizedTerm&) = default;
  friend auto operator<=>(const NormalizedTerm&, const NormalizedTerm&) = default;

 private:
  explicit NormalizedTerm(std::string value) : value_(std::move(value)) {}
  friend NormalizedTerm normalize_term(std::string_view raw);
  friend std::optional<NormalizedTerm> try_normalize_term(std::string_view raw);

  std::string value_;
};

// Normalizes a raw term. Internal hyphens and stopwords are kept.
// Throws EmptyTermError when nothing survives.
NormalizedTerm normalize_term(std::string_view raw);

// Same as normalize_term but returns nullopt instead of throwing.
std::optional<NormalizedTerm> try_normalize_term(std::string_view raw);

// Set of normalized single-token stopwords.
class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(const std::vector<std::string>& words);

  // The list shipped with the library (same content as data/stopwords.txt).
  static StopwordList english();

  // One token per line, UTF-8, '#' starts a comment.
  static StopwordList load(const std::filesystem::path& path);
  static StopwordList parse(std::string_view text);

  bool contains(std::string_view token) const;
  std::size_t size() const noexcept { return sorted_.size(); }
  const std::vector<std::string>& words() const noexcept { return sorted_; }

 private:
  std::unordered_set<std::string> set_;
  std::vector<std::string> sorted_;
};

// Everything that influences token output. digest() identifies the
// configuration inside persisted index snapshots.
struct TokenizerConfig {
  StopwordList stopwords = StopwordList::english();

  std::string digest() const;
};

// Folds, splits on Unicode whitespace, strips edge punctuation per token,
// drops empty tokens and stopwords. Order is preserved.
std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordList& stopwords);
std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config);

// Number of Unicode code points in a UTF-8 string. Invalid sequences count
// as one code point each.
std::size_t code_point_length(std::string_view utf8);

// Decodes UTF-8 to code points. Invalid sequences become U+FFFD.
std::u32string to_code_points(std::string_view utf8);

}  // namespace sdgtag

#endif  // SDGTAG_TEXTPREP_HPP_
