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

#ifndef SDGTAG_TESTS_FIXTURES_HPP_
#define SDGTAG_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "sdgtag/fostag.hpp"
#include "sdgtag/fuzzylink.hpp"
#include "sdgtag/ontology.hpp"

namespace sdgtag::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
  // Writes `content` to path()/name and returns the full path.
  std::filesystem::path write(const std::string& name, const std::string& content) const;

 private:
  std::filesystem::path path_;
};

// A pronounceable lowercase pseudo-word unique to (group, item, k); never a
// stopword and never shared between different arguments.
std::string pseudo_word(int group, int item, int k);

// Random lowercase string over `alphabet` with length in [lo, hi].
std::string random_string(std::mt19937_64& rng, const std::string& alphabet, int lo, int hi);

// Synthetic pipeline inputs: 17 goals with `fos_per_sdg` Fields of Study
// each, every FOS with its own vocabulary, plus `filler` unlinked FOS whose
// documents draw on a shared filler vocabulary. The ontology's terms equal
// the linked FOS names, so linking is exact.
struct SyntheticPipeline {
  std::vector<SourceDataset> sources;
  FosCatalog catalog;
  std::vector<FosDocument> docs;
  std::vector<std::string> sdg13_sentences;  // drawn from SDG 13 documents only

  std::string sdg13_text() const;
  std::string catalog_csv() const;
  std::string corpus_jsonl() const;
  // Writes sources, catalog, corpus and a manifest into `dir`; returns the
  // manifest path. Artifacts go to dir/out.
  std::filesystem::path write_to(const std::filesystem::path& dir) const;
};

SyntheticPipeline make_pipeline(int fos_per_sdg = 3, int filler = 0, std::uint64_t seed = 7);

// A DOI fixture with one resolvable climate abstract ("10.5555/climate.1")
// made of SDG 13 vocabulary from `p`.
std::string doi_fixture_jsonl(const SyntheticPipeline& p);

}  // namespace sdgtag::testing

#endif  // SDGTAG_TESTS_FIXTURES_HPP_
