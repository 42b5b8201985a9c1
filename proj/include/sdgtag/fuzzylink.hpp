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

#ifndef SDGTAG_FUZZYLINK_HPP_
#define SDGTAG_FUZZYLINK_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdgtag/ontology.hpp"
#include "sdgtag/sdg.hpp"
#include "sdgtag/textprep.hpp"

namespace sdgtag {

inline constexpr double kDefaultLinkThreshold = 0.85;

struct FieldOfStudy {
  std::string fos_id;
  NormalizedTerm name;
  std::optional<std::string> parent_id;
};

// Fields-of-Study catalog, sorted by fos_id, with a name index.
class FosCatalog {
 public:
  FosCatalog() = default;
  // Throws DuplicateFosError on a repeated id and ParseError when a
  // parent_id refers to an unknown entry.
  explicit FosCatalog(std::vector<FieldOfStudy> entries);

  // CSV with header fos_id,name,parent_id (parent_id may be empty).
  static FosCatalog load(const std::filesystem::path& path);
  static FosCatalog parse(std::string_view csv_text);

  const std::vector<FieldOfStudy>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const FieldOfStudy* find(std::string_view fos_id) const;
  bool contains(std::string_view fos_id) const { return find(fos_id) != nullptr; }

  // Every fos_id carrying this exact normalized name, ascending.
  const std::vector<std::string>& ids_named(const NormalizedTerm& name) const;
  // name -> ids, ordered by name.
  const std::map<NormalizedTerm, std::vector<std::string>>& name_index() const noexcept {
    return by_name_;
  }

 private:
  std::vector<FieldOfStudy> entries_;
  std::map<NormalizedTerm, std::vector<std::string>> by_name_;
};

// Minimum number of single code point insertions, deletions, and
// substitutions turning `a` into `b`.
std::size_t levenshtein_distance(std::u32string_view a, std::u32string_view b);
// UTF-8 overload; compares code points.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// 1 - d / max(|a|, |b|) over code points, computed as (m - d) / m so that a
// ratio equal to a decimal threshold rounds to the same double.
// Throws UndefinedRatioError when both strings are empty.
double similarity_ratio(std::u32string_view a, std::u32string_view b);
double similarity_ratio(std::string_view a, std::string_view b);

struct Link {
  NormalizedTerm term;
  SdgId sdg;
  std::string fos_id;
  double ratio;

  friend bool operator==(const Link&, const Link&) = default;
};

// Links ordered by (term, sdg, fos_id). Every ratio exceeds the threshold
// the table was built with.
class LinkTable {
 public:
  LinkTable() = default;
  LinkTable(std::vector<Link> links, double threshold);

  const std::vector<Link>& links() const noexcept { return links_; }
  std::size_t size() const noexcept { return links_.size(); }
  bool empty() const noexcept { return links_.empty(); }
  double threshold() const noexcept { return threshold_; }

  // CSV `term,sdg,fos_id,ratio`, ratio with 4 decimals.
  std::string to_csv() const;
  void save_csv(const std::filesystem::path& path) const;

  friend bool operator==(const LinkTable& a, const LinkTable& b) {
    return a.links_ == b.links_;
  }

 private:
  std::vector<Link> links_;
  double threshold_ = kDefaultLinkThreshold;
};

struct LinkOptions {
  double threshold = kDefaultLinkThreshold;  // strict: ratio > threshold
  // Skip name/term pairs whose length difference alone rules out a ratio
  // above the threshold. Never changes the result.
  bool length_blocking = true;
  unsigned workers = 1;
};

// Throws ConfigError unless 0 < threshold <= 1.
LinkTable link_ontology_to_fos(const Ontology& ontology, const FosCatalog& catalog,
                               const LinkOptions& options = {});

// SDG -> linked fos_ids. All 17 goals are always present.
class SdgFosMap {
 public:
  using FosSet = std::set<std::string>;

  const FosSet& operator[](SdgId sdg) const { return sets_[sdg.index()]; }
  FosSet& operator[](SdgId sdg) { return sets_[sdg.index()]; }
  const std::array<FosSet, kSdgCount>& sets() const noexcept { return sets_; }

  // Number of distinct fos_ids across all goals.
  std::size_t distinct_fos() const;

  // {"1": [...], ..., "17": [...]}
  nlohmann::ordered_json to_json() const;
  static SdgFosMap from_json(const nlohmann::json& doc);
  void save(const std::filesystem::path& path) const;
  static SdgFosMap load(const std::filesystem::path& path);

  friend bool operator==(const SdgFosMap&, const SdgFosMap&) = default;

 private:
  std::array<FosSet, kSdgCount> sets_;
};

SdgFosMap build_sdg_fos_map(const LinkTable& links);

}  // namespace sdgtag

#endif  // SDGTAG_FUZZYLINK_HPP_
