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

#include "fixtures.hpp"

#include <atomic>
#include <sstream>

#include "json.hpp"
#include "sdgtag/csv.hpp"
#include "sdgtag/digest.hpp"

namespace sdgtag::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  auto base = fs::temp_directory_path();
  std::random_device rd;
  for (;;) {
    path_ = base / ("sdgtag-test-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    if (fs::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

fs::path TempDir::write(const std::string& name, const std::string& content) const {
  fs::path p = path_ / name;
  fs::create_directories(p.parent_path());
  write_file(p, content);
  return p;
}

namespace {

std::string letters(int n) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + n % 10));
    n /= 10;
  } while (n > 0);
  return s;
}

}  // namespace

std::string pseudo_word(int group, int item, int k) {
  return "w" + letters(group) + "x" + letters(item) + "y" + letters(k);
}

std::string random_string(std::mt19937_64& rng, const std::string& alphabet, int lo, int hi) {
  std::uniform_int_distribution<int> len(lo, hi);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s(static_cast<std::size_t>(len(rng)), ' ');
  for (auto& c : s) c = alphabet[pick(rng)];
  return s;
}

std::string SyntheticPipeline::sdg13_text() const {
  std::string out;
  for (const auto& s : sdg13_sentences) out += s + " ";
  return out;
}

std::string SyntheticPipeline::catalog_csv() const {
  std::string out = "fos_id,name,parent_id\n";
  for (const auto& e : catalog.entries()) {
    out += csv::escape(e.fos_id) + "," + csv::escape(e.name.str()) + "," +
           csv::escape(e.parent_id.value_or("")) + "\n";
  }
  return out;
}

std::string SyntheticPipeline::corpus_jsonl() const {
  std::string out;
  for (const auto& d : docs) out += nlohmann::json{{"fos_id", d.fos_id}, {"text", d.text}}.dump() + "\n";
  return out;
}

fs::path SyntheticPipeline::write_to(const fs::path& dir) const {
  nlohmann::ordered_json manifest;
  nlohmann::ordered_json srcs = nlohmann::ordered_json::array();
  for (const auto& s : sources) {
    std::string body = "term,sdg\n";
    for (const auto& item : s.items) {
      body += csv::escape(item.term) + "," + std::to_string(item.sdg.number()) + "\n";
    }
    write_file(dir / (s.meta.source_id + ".csv"), body);
    srcs.push_back({{"source_id", s.meta.source_id},
                    {"name", s.meta.name},
                    {"origin", s.meta.origin},
                    {"path", s.meta.source_id + ".csv"},
                    {"format", "csv"}});
  }
  write_file(dir / "catalog.csv", catalog_csv());
  write_file(dir / "corpus.jsonl", corpus_jsonl());
  write_file(dir / "dois.jsonl", doi_fixture_jsonl(*this));
  manifest["sources"] = srcs;
  manifest["fos_catalog"] = "catalog.csv";
  manifest["fos_corpus"] = "corpus.jsonl";
  manifest["output_dir"] = "out";
  manifest["created_at"] = "2026-01-01T00:00:00Z";
  manifest["doi"] = {{"fixture", "dois.jsonl"}, {"max_in_flight", 4}};
  manifest["service"] = {{"feedback_store", "feedback.jsonl"}};
  fs::path path = dir / "manifest.json";
  write_file(path, manifest.dump(2) + "\n");
  return path;
}

SyntheticPipeline make_pipeline(int fos_per_sdg, int filler, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  SyntheticPipeline p;
  std::vector<FieldOfStudy> fos;
  std::vector<std::string> linked_names;

  // Linked names are pairwise dissimilar (ratio <= 0.5) so the linker can
  // only produce exact matches.
  auto fresh_name = [&] {
    for (;;) {
      std::string n = random_string(rng, alphabet, 10, 14);
      bool ok = true;
      for (const auto& other : linked_names) {
        if (similarity_ratio(n, other) > 0.5) {
          ok = false;
          break;
        }
      }
      if (ok) return n;
    }
  };

  SourceDataset s1{{"alpha", "Alpha keywords", "synthetic"}, {}};
  SourceDataset s2{{"beta", "Beta keywords", "synthetic"}, {}};
  SourceDataset s3{{"gamma", "Gamma keywords", "synthetic"}, {}};
  std::uniform_int_distribution<int> count(1, 3);
  int serial = 0;
  for (int s = 1; s <= kSdgCount; ++s) {
    for (int j = 0; j < fos_per_sdg; ++j) {
      std::string id = "L" + std::to_string(1000 + serial++);
      std::string name = fresh_name();
      linked_names.push_back(name);
      fos.push_back({id, normalize_term(name), std::nullopt});

      std::string first, second;
      for (int k = 0; k < 6; ++k) {
        std::string w = pseudo_word(s, j, k);
        for (int c = count(rng); c > 0; --c) (k < 3 ? first : second) += w + " ";
      }
      first = first.substr(0, first.size() - 1) + ".";
      second = second.substr(0, second.size() - 1) + ".";
      p.docs.push_back({id, first + " " + second});
      if (s == 13) {
        p.sdg13_sentences.push_back(first);
        p.sdg13_sentences.push_back(second);
      }

      // Upper-cased in one source to exercise normalization during merge.
      std::string upper = name;
      for (auto& c : upper) c = static_cast<char>(c - 'a' + 'A');
      (j % 2 == 0 ? s1 : s2).items.push_back({upper, SdgId(s)});
      if (j == 0) s3.items.push_back({name, SdgId(s)});
    }
  }

  std::uniform_int_distribution<int> vocab(0, 299);
  std::uniform_int_distribution<int> doc_len(5, 12);
  for (int i = 0; i < filler; ++i) {
    std::string id = "F" + std::to_string(100000 + i);
    fos.push_back({id, normalize_term(random_string(rng, alphabet, 10, 14)), std::nullopt});
    std::string text;
    if (i % 50 == 49) {
      text = p.docs.back().text;  // exact duplicate, so ties occur
    } else {
      for (int t = doc_len(rng); t > 0; --t) text += pseudo_word(99, vocab(rng), 0) + " ";
    }
    p.docs.push_back({id, text});
  }
  p.catalog = FosCatalog(std::move(fos));
  p.sources = {s1, s2, s3};
  return p;
}

std::string doi_fixture_jsonl(const SyntheticPipeline& p) {
  std::string out;
  out += nlohmann::json{{"doi", "10.5555/climate.1"},
                        {"title", "A climate study"},
                        {"abstract", "<jats:p>" + p.sdg13_text() + "</jats:p>"}}
             .dump() +
         "\n";
  out += nlohmann::json{{"doi", "10.5555/empty.1"}, {"title", "Editorial"}, {"abstract", ""}}
             .dump() +
         "\n";
  return out;
}

}  // namespace sdgtag::testing
