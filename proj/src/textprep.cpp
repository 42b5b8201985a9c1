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

#include "sdgtag/textprep.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

namespace {

// Bumped whenever the folding rules change so stale index snapshots are
// rejected.
constexpr std::string_view kTokenizerRevision = "sdgtag-tokenizer/1";

const icu::Normalizer2& nfkc_casefold() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFKCCasefoldInstance(status);
    if (U_FAILURE(status) || n == nullptr) {
      throw Error(std::string("ICU NFKC_Casefold unavailable: ") +
                  u_errorName(status));
    }
    return n;
  }();
  return *instance;
}

bool is_separator(UChar32 c) {
  return u_isUWhiteSpace(c) || u_charType(c) == U_CONTROL_CHAR;
}

bool is_edge_punctuation(UChar32 c) {
  return (U_GET_GC_MASK(c) & (U_GC_P_MASK | U_GC_S_MASK)) != 0;
}

// NFKC_Casefold, then split on whitespace and trim punctuation/symbols from
// both ends of each word. Empty words are dropped.
std::vector<std::string> folded_words(std::string_view raw) {
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString folded = nfkc_casefold().normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("normalization failed: ") + u_errorName(status));
  }

  std::vector<std::string> words;
  const int32_t n = folded.length();
  int32_t i = 0;
  while (i < n) {
    while (i < n && is_separator(folded.char32At(i))) i = folded.moveIndex32(i, 1);
    int32_t start = i;
    while (i < n && !is_separator(folded.char32At(i))) i = folded.moveIndex32(i, 1);
    int32_t end = i;

    while (start < end && is_edge_punctuation(folded.char32At(start))) {
      start = folded.moveIndex32(start, 1);
    }
    while (end > start) {
      int32_t prev = folded.moveIndex32(end, -1);
      if (!is_edge_punctuation(folded.char32At(prev))) break;
      end = prev;
    }
    if (start < end) {
      std::string word;
      folded.tempSubStringBetween(start, end).toUTF8String(word);
      words.push_back(std::move(word));
    }
  }
  return words;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

}  // namespace

NormalizedTerm normalize_term(std::string_view raw) {
  std::string value = join(folded_words(raw));
  if (value.empty()) {
    throw EmptyTermError("term '" + std::string(raw) +
                         "' is empty after normalization");
  }
  return NormalizedTerm(std::move(value));
}

std::optional<NormalizedTerm> try_normalize_term(std::string_view raw) {
  std::string value = join(folded_words(raw));
  if (value.empty()) return std::nullopt;
  return NormalizedTerm(std::move(value));
}

NormalizedTerm NormalizedTerm::from_normalized(std::string value) {
  NormalizedTerm term = normalize_term(value);
  if (term.value_ != value) {
    throw EmptyTermError("'" + value + "' is not a normalized term");
  }
  return term;
}

StopwordList::StopwordList(const std::vector<std::string>& words) {
  for (const auto& raw : words) {
    auto folded = folded_words(raw);
    if (folded.size() != 1) continue;  // blank or multi-word: cannot match a token
    if (set_.insert(folded.front()).second) sorted_.push_back(folded.front());
  }
  std::sort(sorted_.begin(), sorted_.end());
}

StopwordList StopwordList::parse(std::string_view text) {
  std::vector<std::string> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    words.emplace_back(line);
    pos = eol + 1;
  }
  return StopwordList(words);
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

bool StopwordList::contains(std::string_view token) const {
  return set_.find(std::string(token)) != set_.end();
}

std::string TokenizerConfig::digest() const {
  std::string material(kTokenizerRevision);
  material.push_back('\n');
  for (const auto& w : stopwords.words()) {
    material += w;
    material.push_back('\n');
  }
  return "sha256:" + sha256_hex(material);
}

std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordList& stopwords) {
  std::vector<std::string> tokens = folded_words(text);
  if (stopwords.size() > 0) {
    std::erase_if(tokens, [&](const std::string& t) { return stopwords.contains(t); });
  }
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const TokenizerConfig& config) {
  return tokenize(text, config.stopwords);
}

std::size_t code_point_length(std::string_view utf8) {
  std::size_t count = 0;
  int32_t i = 0;
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto n = static_cast<int32_t>(utf8.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(s, i, n, c);
    (void)c;
    ++count;
  }
  return count;
}

std::u32string to_code_points(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  int32_t i = 0;
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto n = static_cast<int32_t>(utf8.size());
  while (i < n) {
    UChar32 c;
    U8_NEXT(s, i, n, c);
    out.push_back(c < 0 ? U'\uFFFD' : static_cast<char32_t>(c));
  }
  return out;
}

}  // namespace sdgtag
