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

#ifndef SDGTAG_ENGINE_HPP_
#define SDGTAG_ENGINE_HPP_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdgtag/doiresolve.hpp"
#include "sdgtag/fostag.hpp"
#include "sdgtag/fuzzylink.hpp"
#include "sdgtag/ontology.hpp"
#include "sdgtag/sdgscore.hpp"

namespace sdgtag {

struct EngineConfig {
  std::filesystem::path ontology;
  std::filesystem::path fos_catalog;
  // A snapshot is preferred; otherwise the index is built from the corpus.
  std::optional<std::filesystem::path> fos_index;
  std::optional<std::filesystem::path> fos_corpus;
  std::optional<std::filesystem::path> thresholds;  // defaults when unset
  std::optional<std::filesystem::path> stopwords;   // built-in list when unset
  double link_threshold = kDefaultLinkThreshold;
  TagOptions tag;
};

// The loaded, cross-checked artifacts that answer classification queries.
// Immutable after load().
class Engine {
 public:
  // Throws ConfigError for a missing path and sdgtag::Error subclasses for
  // invalid artifacts.
  static std::shared_ptr<const Engine> load(const EngineConfig& config);

  const Ontology& ontology() const noexcept { return ontology_; }
  const FosCatalog& catalog() const noexcept { return catalog_; }
  const LinkTable& links() const noexcept { return links_; }
  const SdgFosMap& sdg_fos_map() const noexcept { return map_; }
  const FosIndex& index() const noexcept { return index_; }
  const ThresholdConfig& thresholds() const noexcept { return thresholds_; }
  const TagOptions& tag_options() const noexcept { return tag_; }

  Classification classify(std::string_view text) const;

  // Validate, resolve (bounded by max_in_flight) and classify each raw DOI
  // string. Returns {"results": [...]}, aligned with `raw_dois`; each item
  // has status "ok" with a classification or "error" with code
  // invalid_doi | not_found | no_abstract | transport.
  nlohmann::ordered_json tag_dois(const std::vector<std::string>& raw_dois,
                                  MetadataClient& client, std::size_t max_in_flight) const;

  nlohmann::ordered_json stats() const;
  const nlohmann::ordered_json& artifact_digests() const noexcept { return digests_; }

 private:
  Engine(Ontology ontology, FosCatalog catalog, LinkTable links, FosIndex index,
         ThresholdConfig thresholds, TagOptions tag, nlohmann::ordered_json digests);

  Ontology ontology_;
  StatsReport ontology_stats_;
  FosCatalog catalog_;
  LinkTable links_;
  SdgFosMap map_;
  FosIndex index_;
  ThresholdConfig thresholds_;
  TagOptions tag_;
  nlohmann::ordered_json digests_;
};

}  // namespace sdgtag

#endif  // SDGTAG_ENGINE_HPP_
