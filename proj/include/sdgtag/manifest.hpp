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

#ifndef SDGTAG_MANIFEST_HPP_
#define SDGTAG_MANIFEST_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdgtag/fostag.hpp"
#include "sdgtag/ontology.hpp"
#include "sdgtag/service.hpp"

namespace sdgtag {

struct ManifestSource {
  SourceMetadata meta;
  std::filesystem::path path;
  SourceFormat format = SourceFormat::kCsv;

  friend bool operator==(const ManifestSource&, const ManifestSource&) = default;
};

// Everything one pipeline run needs. Relative paths in the file resolve
// against the manifest's own directory; the loaded struct holds absolute
// paths.
struct PipelineManifest {
  std::vector<ManifestSource> sources;
  std::filesystem::path fos_catalog;
  std::filesystem::path fos_corpus;
  std::optional<std::filesystem::path> thresholds;
  std::optional<std::filesystem::path> stopwords;
  double link_threshold = kDefaultLinkThreshold;
  TagOptions tag;
  std::filesystem::path output_dir = "build/artifacts";
  // Stamped into the ontology; fixed here so reruns are byte-identical.
  std::optional<std::string> created_at;

  std::optional<std::filesystem::path> doi_fixture;
  HttpClientConfig doi;

  std::string host = "127.0.0.1";
  int port = 8080;
  std::filesystem::path feedback_store = "feedback.jsonl";
  std::size_t max_text_length = 20000;
  std::size_t doi_batch_cap = 100;
  std::optional<std::filesystem::path> static_dir;

  std::filesystem::path ontology_path() const { return output_dir / "ontology.json"; }
  std::filesystem::path links_path() const { return output_dir / "links.csv"; }
  std::filesystem::path map_path() const { return output_dir / "sdg_fos_map.json"; }
  std::filesystem::path index_path() const { return output_dir / "fos_index.json"; }

  // Throws ConfigError naming the offending key.
  static PipelineManifest from_json(const nlohmann::json& doc,
                                    const std::filesystem::path& base_dir);
  static PipelineManifest load(const std::filesystem::path& path);
  // Paths are written as given (absolute after load).
  nlohmann::ordered_json to_json() const;
  void save(const std::filesystem::path& path) const;

  // The index snapshot is used when it exists, else the corpus.
  EngineConfig engine_config() const;
  ServiceConfig service_config() const;
};

// created_at, else SOURCE_DATE_EPOCH, else the Unix epoch.
std::string resolve_created_at(const PipelineManifest& manifest);

}  // namespace sdgtag

#endif  // SDGTAG_MANIFEST_HPP_
