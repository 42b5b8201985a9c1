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

#include "sdgtag/fostag.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"
#include "sdgtag/fuzzylink.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::string_view kSnapshotFormat = "sdgtag-fos-index";
constexpr int kSnapshotVersion = 1;

double euclidean_norm(const std::vector<SparseVector::Entry>& entries) {
  double sum = 0.0;
  for (const auto& [_, w] : entries) sum += w * w;
  return std::sqrt(sum);
}

double clamp_unit(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

std::vector<FosDocument> parse_fos_corpus(std::string_view jsonl) {
  std::vector<FosDocument> docs;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < jsonl.size()) {
    std::size_t eol = jsonl.find('\n', pos);
    if (eol == std::string_view::npos) eol = jsonl.size();
    std::string_view line = jsonl.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      json rec = json::parse(line);
      docs.push_back(FosDocument{rec.at("fos_id").get<std::string>(),
                                 rec.at("text").get<std::string>()});
    } catch (const json::exception& e) {
      throw ParseError("FOS corpus line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return docs;
}

std::vector<FosDocument> load_fos_corpus(const std::filesystem::path& path) {
  return parse_fos_corpus(read_file(path));
}

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVector v;
  for (const auto& [idx, w] : entries) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("sparse vector weight must be finite and >= 0");
    }
    if (!v.entries_.empty() && v.entries_.back().first == idx) {
      v.entries_.back().second += w;
    } else {
      v.entries_.emplace_back(idx, w);
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.second == 0.0; });
  v.norm_ = euclidean_norm(v.entries_);
  return v;
}

SparseVector SparseVector::normalized() const {
  if (norm_ == 0.0) return *this;
  SparseVector v;
  v.entries_.reserve(entries_.size());
  for (const auto& [idx, w] : entries_) v.entries_.emplace_back(idx, w / norm_);
  v.norm_ = euclidean_norm(v.entries_);
  return v;
}

double SparseVector::dot(const SparseVector& other) const {
  double sum = 0.0;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() && b != other.entries_.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += a->second * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double cosine_similarity(const SparseVector& u, const SparseVector& v) {
  if (u.norm() == 0.0 || v.norm() == 0.0) return 0.0;
  return clamp_unit(u.dot(v) / (u.norm() * v.norm()));
}

FosIndex FosIndex::build(std::vector<FosDocument> docs, TokenizerConfig tokenizer) {
  if (docs.empty()) throw EmptyCorpusError("cannot build a FOS index from no documents");
  std::sort(docs.begin(), docs.end(),
            [](const auto& a, const auto& b) { return a.fos_id < b.fos_id; });
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].fos_id.empty()) throw ParseError("FOS document with empty fos_id");
    if (docs[i].text.empty()) {
      throw ParseError("FOS document '" + docs[i].fos_id + "' has empty text");
    }
    if (i > 0 && docs[i - 1].fos_id == docs[i].fos_id) {
      throw DuplicateFosError("duplicate FOS document '" + docs[i].fos_id + "'");
    }
  }

  FosIndex index;
  index.tokenizer_ = std::move(tokenizer);

  std::vector<std::vector<std::string>> doc_tokens;
  doc_tokens.reserve(docs.size());
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    doc_tokens.push_back(sdgtag::tokenize(doc.text, index.tokenizer_));
    std::vector<std::string> unique = doc_tokens.back();
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (auto& t : unique) ++df[t];
  }

  const double n = static_cast<double>(docs.size());
  index.vocabulary_.reserve(df.size());
  index.idf_.reserve(df.size());
  for (const auto& [term, count] : df) {
    index.term_ids_.emplace(term, static_cast<std::uint32_t>(index.vocabulary_.size()));
    index.vocabulary_.push_back(term);
    index.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }

  index.fos_ids_.reserve(docs.size());
  index.vectors_.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::vector<std::uint32_t> ids;
    ids.reserve(doc_tokens[i].size());
    for (const auto& t : doc_tokens[i]) ids.push_back(index.term_ids_.at(t));
    index.fos_ids_.push_back(std::move(docs[i].fos_id));
    index.vectors_.push_back(index.weigh(ids));
  }
  index.build_postings();
  return index;
}

SparseVector FosIndex::weigh(const std::vector<std::uint32_t>& term_ids) const {
  std::map<std::uint32_t, std::size_t> tf;
  for (auto id : term_ids) ++tf[id];
  std::vector<SparseVector::Entry> entries;
  entries.reserve(tf.size());
  for (const auto& [id, count] : tf) {
    entries.emplace_back(id, static_cast<double>(count) * idf_[id]);
  }
  return SparseVector::from_entries(std::move(entries)).normalized();
}

void FosIndex::build_postings() {
  postings_.assign(vocabulary_.size(), {});
  for (std::uint32_t f = 0; f < vectors_.size(); ++f) {
    for (const auto& [term, w] : vectors_[f].entries()) {
      postings_[term].push_back(Posting{f, w});
    }
  }
}

const SparseVector* FosIndex::vector_for(std::string_view fos_id) const {
  auto it = std::lower_bound(fos_ids_.begin(), fos_ids_.end(), fos_id);
  if (it == fos_ids_.end() || *it != fos_id) return nullptr;
  return &vectors_[static_cast<std::size_t>(it - fos_ids_.begin())];
}

std::optional<std::uint32_t> FosIndex::term_index(std::string_view term) const {
  auto it = term_ids_.find(std::string(term));
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

SparseVector FosIndex::vectorize(std::string_view text) const {
  std::vector<std::uint32_t> ids;
  for (const auto& token : sdgtag::tokenize(text, tokenizer_)) {
    auto it = term_ids_.find(token);
    if (it != term_ids_.end()) ids.push_back(it->second);
  }
  return weigh(ids);
}

std::vector<FosTag> FosIndex::tag(const SparseVector& query,
                                  const TagOptions& options) const {
  if (query.is_zero() || options.top_k == 0) return {};

  // Accumulate in ascending term order, which is also the order
  // SparseVector::dot uses, so scores match cosine_similarity exactly.
  std::vector<double> dot(vectors_.size(), 0.0);
  std::vector<std::uint32_t> touched;
  std::vector<char> seen(vectors_.size(), 0);
  for (const auto& [term, qw] : query.entries()) {
    if (term >= postings_.size()) continue;
    for (const Posting& p : postings_[term]) {
      if (!seen[p.fos]) {
        seen[p.fos] = 1;
        touched.push_back(p.fos);
      }
      dot[p.fos] += qw * p.weight;
    }
  }
  if (options.min_sim <= 0.0) {
    // Zero-similarity entries qualify too; consider every FOS.
    touched.resize(vectors_.size());
    for (std::uint32_t f = 0; f < vectors_.size(); ++f) touched[f] = f;
  }

  std::vector<std::pair<double, std::uint32_t>> scored;
  scored.reserve(touched.size());
  for (auto f : touched) {
    const double norm = vectors_[f].norm();
    double sim = norm == 0.0 ? 0.0 : clamp_unit(dot[f] / (query.norm() * norm));
    if (sim >= options.min_sim) scored.emplace_back(sim, f);
  }
  auto better = [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  };
  std::size_t k = std::min(options.top_k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k),
                    scored.end(), better);

  std::vector<FosTag> tags;
  tags.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    tags.push_back(FosTag{fos_ids_[scored[i].second], scored[i].first});
  }
  return tags;
}

std::vector<FosTag> FosIndex::tag(std::string_view text, const TagOptions& options) const {
  return tag(vectorize(text), options);
}

void FosIndex::check_against(const FosCatalog& catalog) const {
  for (const auto& id : fos_ids_) {
    if (!catalog.contains(id)) {
      throw ParseError("FOS index entry '" + id + "' is not in the FOS catalog");
    }
  }
}

ordered_json FosIndex::to_json() const {
  ordered_json vectors = ordered_json::array();
  for (std::size_t f = 0; f < vectors_.size(); ++f) {
    ordered_json terms = ordered_json::array();
    ordered_json weights = ordered_json::array();
    for (const auto& [idx, w] : vectors_[f].entries()) {
      terms.push_back(idx);
      weights.push_back(w);
    }
    vectors.push_back({{"fos_id", fos_ids_[f]},
                       {"terms", std::move(terms)},
                       {"weights", std::move(weights)}});
  }
  return ordered_json{{"format", kSnapshotFormat},
                      {"version", kSnapshotVersion},
                      {"build_config", build_config()},
                      {"document_count", fos_ids_.size()},
                      {"vocabulary", vocabulary_},
                      {"idf", idf_},
                      {"vectors", std::move(vectors)}};
}

void FosIndex::save(const std::filesystem::path& path) const {
  write_file(path, to_json().dump() + "\n");
}

FosIndex FosIndex::from_json(const json& doc, TokenizerConfig tokenizer) {
  FosIndex index;
  index.tokenizer_ = std::move(tokenizer);
  try {
    if (!doc.is_object() || doc.value("format", "") != kSnapshotFormat) {
      throw ParseError("not an sdgtag FOS index snapshot");
    }
    if (doc.at("version").get<int>() != kSnapshotVersion) {
      throw ParseError("unsupported FOS index snapshot version " + doc.at("version").dump());
    }
    std::string config = doc.at("build_config").get<std::string>();
    if (config != index.build_config()) {
      throw ConfigError("FOS index snapshot was built with tokenizer config " + config +
                        " but the current config is " + index.build_config());
    }
    index.vocabulary_ = doc.at("vocabulary").get<std::vector<std::string>>();
    index.idf_ = doc.at("idf").get<std::vector<double>>();
    if (index.idf_.size() != index.vocabulary_.size()) {
      throw ParseError("FOS index snapshot: idf/vocabulary size mismatch");
    }
    for (std::size_t i = 0; i < index.vocabulary_.size(); ++i) {
      if (i > 0 && !(index.vocabulary_[i - 1] < index.vocabulary_[i])) {
        throw ParseError("FOS index snapshot: vocabulary not strictly sorted");
      }
      if (!(index.idf_[i] >= 1.0)) {
        throw ParseError("FOS index snapshot: idf below 1 for '" + index.vocabulary_[i] + "'");
      }
      index.term_ids_.emplace(index.vocabulary_[i], static_cast<std::uint32_t>(i));
    }
    for (const auto& v : doc.at("vectors")) {
      auto terms = v.at("terms").get<std::vector<std::uint32_t>>();
      auto weights = v.at("weights").get<std::vector<double>>();
      if (terms.size() != weights.size()) {
        throw ParseError("FOS index snapshot: terms/weights size mismatch");
      }
      std::vector<SparseVector::Entry> entries;
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i] >= index.vocabulary_.size() || (i > 0 && terms[i] <= terms[i - 1]) ||
            !(weights[i] > 0.0)) {
          throw ParseError("FOS index snapshot: invalid vector entry");
        }
        entries.emplace_back(terms[i], weights[i]);
      }
      std::string id = v.at("fos_id").get<std::string>();
      if (!index.fos_ids_.empty() && !(index.fos_ids_.back() < id)) {
        throw ParseError("FOS index snapshot: fos_ids not strictly sorted");
      }
      SparseVector vec = SparseVector::from_entries(std::move(entries));
      if (!vec.is_zero() && std::abs(vec.norm() - 1.0) > 1e-9) {
        throw ParseError("FOS index snapshot: vector '" + id + "' is not unit norm");
      }
      index.fos_ids_.push_back(std::move(id));
      index.vectors_.push_back(std::move(vec));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed FOS index snapshot: ") + e.what());
  }
  if (index.fos_ids_.empty()) throw EmptyCorpusError("FOS index snapshot has no vectors");
  index.build_postings();
  return index;
}

FosIndex FosIndex::load(const std::filesystem::path& path, TokenizerConfig tokenizer) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': invalid JSON: " + e.what());
  }
  return from_json(doc, std::move(tokenizer));
}

SparseVector vectorize_text(std::string_view text, const FosIndex& index) {
  return index.vectorize(text);
}

std::vector<FosTag> tag_fos(std::string_view text, const FosIndex& index,
                            const TagOptions& options) {
  return index.tag(text, options);
}

}  // namespace sdgtag
