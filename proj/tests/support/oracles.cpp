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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "sdgtag/textprep.hpp"

namespace sdgtag::testing {

std::size_t RecursiveLevenshtein::operator()(const std::u32string& a, const std::u32string& b) {
  a_ = &a;
  b_ = &b;
  memo_.assign((a.size() + 1) * (b.size() + 1), -1);
  return go(0, 0);
}

std::size_t RecursiveLevenshtein::go(std::size_t i, std::size_t j) {
  const std::size_t n = a_->size();
  const std::size_t m = b_->size();
  if (i == n) return m - j;
  if (j == m) return n - i;
  int& slot = memo_[i * (m + 1) + j];
  if (slot >= 0) return static_cast<std::size_t>(slot);
  std::size_t best;
  if ((*a_)[i] == (*b_)[j]) {
    best = go(i + 1, j + 1);
  } else {
    best = 1 + std::min({go(i + 1, j), go(i, j + 1), go(i + 1, j + 1)});
  }
  slot = static_cast<int>(best);
  return best;
}

double oracle_ratio(const std::string& a, const std::string& b) {
  std::u32string ca = to_code_points(a);
  std::u32string cb = to_code_points(b);
  RecursiveLevenshtein lev;
  double d = static_cast<double>(lev(ca, cb));
  double m = static_cast<double>(std::max(ca.size(), cb.size()));
  return (m - d) / m;
}

std::set<std::tuple<std::string, int, std::string>> naive_links(const Ontology& ontology,
                                                                const FosCatalog& catalog,
                                                                double threshold) {
  std::set<std::tuple<std::string, int, std::string>> out;
  for (const auto& item : ontology.items()) {
    for (const auto& fos : catalog.entries()) {
      if (similarity_ratio(item.term.str(), fos.name.str()) > threshold) {
        out.emplace(item.term.str(), item.sdg.number(), fos.fos_id);
      }
    }
  }
  return out;
}

NaiveTfidf naive_tfidf(const std::vector<FosDocument>& docs, const TokenizerConfig& tok) {
  NaiveTfidf out;
  std::map<std::string, std::map<std::string, int>> counts;
  std::map<std::string, int> df;
  for (const auto& d : docs) {
    auto& c = counts[d.fos_id];
    for (const auto& t : tokenize(d.text, tok)) ++c[t];
    for (const auto& [t, _] : c) ++df[t];
  }
  const double n = static_cast<double>(docs.size());
  for (const auto& [t, k] : df) out.idf[t] = std::log((1.0 + n) / (1.0 + k)) + 1.0;
  for (const auto& [id, c] : counts) {
    std::map<std::string, double> v;
    double sq = 0;
    for (const auto& [t, k] : c) {
      v[t] = k * out.idf[t];
      sq += v[t] * v[t];
    }
    if (sq > 0) {
      for (auto& [t, w] : v) w /= std::sqrt(sq);
    }
    out.vectors[id] = std::move(v);
  }
  return out;
}

std::vector<FosTag> brute_force_tag(const SparseVector& query, const FosIndex& index,
                                    const TagOptions& options) {
  std::vector<FosTag> all;
  for (std::size_t i = 0; i < index.size(); ++i) {
    all.push_back({index.fos_ids()[i], cosine_similarity(query, index.vectors()[i])});
  }
  std::sort(all.begin(), all.end(), [](const FosTag& a, const FosTag& b) {
    return std::tie(b.similarity, a.fos_id) < std::tie(a.similarity, b.fos_id);
  });
  std::vector<FosTag> out;
  for (const auto& t : all) {
    if (query.is_zero() || out.size() == options.top_k) break;
    if (t.similarity >= options.min_sim) out.push_back(t);
  }
  return out;
}

std::array<std::size_t, kSdgCount> triple_loop_counts(const std::vector<FosTag>& tags,
                                                      const SdgFosMap& map) {
  std::array<std::size_t, kSdgCount> counts{};
  for (const auto& tag : tags) {
    for (int s = 1; s <= kSdgCount; ++s) {
      for (const auto& fos : map[SdgId(s)]) {
        if (fos == tag.fos_id) ++counts[s - 1];
      }
    }
  }
  return counts;
}

}  // namespace sdgtag::testing
