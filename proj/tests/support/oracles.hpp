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

#ifndef SDGTAG_TESTS_ORACLES_HPP_
#define SDGTAG_TESTS_ORACLES_HPP_

// Deliberately naive reference implementations. None of them share code
// with the library beyond the tokenizer and vector types they compare.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sdgtag/fostag.hpp"
#include "sdgtag/fuzzylink.hpp"
#include "sdgtag/sdgscore.hpp"

namespace sdgtag::testing {

// Edit distance by the textbook recursion, memoized on suffix positions.
class RecursiveLevenshtein {
 public:
  std::size_t operator()(const std::u32string& a, const std::u32string& b);

 private:
  std::size_t go(std::size_t i, std::size_t j);

  const std::u32string* a_ = nullptr;
  const std::u32string* b_ = nullptr;
  std::vector<int> memo_;
};

// 1 - d / max(|a|, |b|) in code points.
double oracle_ratio(const std::string& a, const std::string& b);

// All (term, sdg, fos_id) triples with ratio > threshold, comparing every
// ontology item with every catalog entry.
std::set<std::tuple<std::string, int, std::string>> naive_links(const Ontology& ontology,
                                                                const FosCatalog& catalog,
                                                                double threshold);

// TF-IDF by direct evaluation over std::map term counts.
struct NaiveTfidf {
  std::map<std::string, double> idf;
  std::map<std::string, std::map<std::string, double>> vectors;  // fos_id -> term -> w
};
NaiveTfidf naive_tfidf(const std::vector<FosDocument>& docs, const TokenizerConfig& tok);

// Scores every FOS with the full cosine formula and sorts by (similarity
// desc, fos_id asc), then applies min_sim and top_k.
std::vector<FosTag> brute_force_tag(const SparseVector& query, const FosIndex& index,
                                    const TagOptions& options);

// Loops over every (tag, sdg, fos) triple.
std::array<std::size_t, kSdgCount> triple_loop_counts(const std::vector<FosTag>& tags,
                                                      const SdgFosMap& map);

}  // namespace sdgtag::testing

#endif  // SDGTAG_TESTS_ORACLES_HPP_
