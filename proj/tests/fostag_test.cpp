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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {
namespace {

using testing::TempDir;

TokenizerConfig no_stopwords() {
  TokenizerConfig t;
  t.stopwords = StopwordList();
  return t;
}

double weight_of(const FosIndex& index, const SparseVector& v, const std::string& term) {
  auto id = index.term_index(term);
  if (!id) return 0.0;
  for (const auto& [t, w] : v.entries()) {
    if (t == *id) return w;
  }
  return 0.0;
}

TEST(SparseVector, CanonicalForm) {
  auto v = SparseVector::from_entries({{3, 1.0}, {1, 0.0}, {3, 2.0}, {0, 4.0}});
  ASSERT_EQ(v.nnz(), 2u);
  EXPECT_EQ(v.entries()[0].first, 0u);
  EXPECT_EQ(v.entries()[1].second, 3.0);
  EXPECT_DOUBLE_EQ(v.norm(), 5.0);
  EXPECT_THROW(SparseVector::from_entries({{0, -1.0}}), std::invalid_argument);
  EXPECT_TRUE(SparseVector().is_zero());
  EXPECT_NEAR(v.normalized().norm(), 1.0, 1e-12);
}

TEST(Cosine, Examples) {
  auto v = SparseVector::from_entries({{0, 2.0}, {5, 1.0}});
  EXPECT_NEAR(cosine_similarity(v, v), 1.0, 1e-12);
  auto w = SparseVector::from_entries({{1, 1.0}});
  EXPECT_EQ(cosine_similarity(v, w), 0.0);
  auto u = SparseVector::from_entries({{0, 1.0}, {1, 1.0}});
  auto a = SparseVector::from_entries({{0, 1.0}});
  EXPECT_NEAR(cosine_similarity(u, a), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(cosine_similarity(SparseVector(), v), 0.0);
}

TEST(FosIndex, IdfValues) {
  auto index = FosIndex::build({{"A", "alpha beta"}, {"B", "beta gamma"}, {"C", "beta delta"}},
                               no_stopwords());
  // "alpha" occurs in one of three documents: ln(4/2) + 1.
  EXPECT_NEAR(index.idf()[*index.term_index("alpha")], 1.6931471805599454, 1e-9);
  // "beta" occurs in all three: the minimum, exactly 1.
  EXPECT_EQ(index.idf()[*index.term_index("beta")], 1.0);
  for (double w : index.idf()) EXPECT_GE(w, 1.0);
}

TEST(FosIndex, RawTermFrequencyThenNormalize) {
  auto index = FosIndex::build({{"A", "solar solar wind"}}, no_stopwords());
  const auto& v = index.vectors()[0];
  EXPECT_NEAR(weight_of(index, v, "solar") / weight_of(index, v, "wind"), 2.0, 1e-12);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);

  auto q = index.vectorize("solar wind solar");
  EXPECT_EQ(q, v);
}

TEST(FosIndex, MatchesNaiveTfidf) {
  auto p = testing::make_pipeline(3, 120, 41);
  TokenizerConfig tok;
  auto index = FosIndex::build(p.docs, tok);
  auto naive = testing::naive_tfidf(p.docs, tok);
  ASSERT_EQ(index.vocabulary_size(), naive.idf.size());
  for (std::size_t i = 0; i < index.vocabulary_size(); ++i) {
    EXPECT_NEAR(index.idf()[i], naive.idf.at(index.vocabulary()[i]), 1e-12);
  }
  for (std::size_t f = 0; f < index.size(); ++f) {
    const auto& expected = naive.vectors.at(index.fos_ids()[f]);
    const auto& got = index.vectors()[f];
    ASSERT_EQ(got.nnz(), expected.size());
    for (const auto& [t, w] : got.entries()) {
      EXPECT_NEAR(w, expected.at(index.vocabulary()[t]), 1e-12);
    }
    EXPECT_NEAR(got.norm(), 1.0, 1e-9);
  }
}

TEST(FosIndex, BuildErrors) {
  EXPECT_THROW(FosIndex::build({}), EmptyCorpusError);
  EXPECT_THROW(FosIndex::build({{"A", "x"}, {"A", "y"}}), DuplicateFosError);
  EXPECT_THROW(FosIndex::build({{"A", ""}}), ParseError);
}

TEST(FosIndex, PermutationInvariant) {
  auto p = testing::make_pipeline(3, 60, 43);
  auto docs = p.docs;
  auto a = FosIndex::build(docs);
  std::mt19937_64 rng(1);
  std::shuffle(docs.begin(), docs.end(), rng);
  auto b = FosIndex::build(docs);
  EXPECT_EQ(a.to_json(), b.to_json());
}

TEST(FosIndex, SnapshotRoundTrip) {
  auto p = testing::make_pipeline(3, 30, 47);
  auto index = FosIndex::build(p.docs);
  TempDir dir;
  index.save(dir / "idx.json");
  auto back = FosIndex::load(dir / "idx.json");
  EXPECT_EQ(back.to_json(), index.to_json());
  auto text = p.sdg13_text();
  EXPECT_EQ(back.tag(text, {}), index.tag(text, {}));

  // A snapshot built under another tokenizer config is refused.
  EXPECT_THROW(FosIndex::load(dir / "idx.json", no_stopwords()), ConfigError);
}

TEST(FosIndex, CheckAgainstCatalog) {
  auto p = testing::make_pipeline(3, 5, 53);
  auto index = FosIndex::build(p.docs);
  EXPECT_NO_THROW(index.check_against(p.catalog));
  auto docs = p.docs;
  docs.push_back({"ZZZ", "orphan words"});
  EXPECT_THROW(FosIndex::build(docs).check_against(p.catalog), ParseError);
}

TEST(Tagger, Examples) {
  auto index = FosIndex::build(
      {{"A", "river water flood"}, {"B", "solar panel"}, {"C", "river water flood"}}, no_stopwords());
  auto tags = index.tag("river water flood", {});
  ASSERT_EQ(tags.size(), 2u);
  EXPECT_EQ(tags[0].fos_id, "A");  // tie broken by fos_id
  EXPECT_EQ(tags[1].fos_id, "C");
  EXPECT_NEAR(tags[0].similarity, 1.0, 1e-12);
  EXPECT_TRUE(index.tag("nothing known here", {}).empty());
  EXPECT_TRUE(tag_fos("", index).empty());
}

// Property: results for a smaller top_k are a prefix of those for a larger
// one, and agree with the brute-force scorer.
TEST(Tagger, TopKPrefixAndBruteForce) {
  auto p = testing::make_pipeline(3, 300, 59);
  auto index = FosIndex::build(p.docs);
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> pick(0, p.docs.size() - 1);
  for (int q = 0; q < 40; ++q) {
    std::string text = p.docs[pick(rng)].text + " " + p.docs[pick(rng)].text;
    auto v = index.vectorize(text);
    for (double min_sim : {0.0, 0.05, 0.3}) {
      auto big = index.tag(v, {50, min_sim});
      EXPECT_EQ(big, testing::brute_force_tag(v, index, {50, min_sim}));
      for (std::size_t k : {1u, 5u, 20u}) {
        auto small = index.tag(v, {k, min_sim});
        ASSERT_LE(small.size(), big.size());
        EXPECT_TRUE(std::equal(small.begin(), small.end(), big.begin()));
      }
      for (const auto& t : big) {
        EXPECT_GE(t.similarity, min_sim);
        EXPECT_LE(t.similarity, 1.0);
      }
    }
  }
}

TEST(Corpus, ParseJsonl) {
  auto docs = parse_fos_corpus("{\"fos_id\": \"A\", \"text\": \"x\"}\n\n{\"fos_id\": \"B\", \"text\": \"y\"}\n");
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].fos_id, "B");
  EXPECT_THROW(parse_fos_corpus("{\"fos_id\": 1}\n"), ParseError);
  EXPECT_THROW(parse_fos_corpus("not json\n"), ParseError);
}

}  // namespace
}  // namespace sdgtag
