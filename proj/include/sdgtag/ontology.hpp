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

#ifndef SDGTAG_ONTOLOGY_HPP_
#define SDGTAG_ONTOLOGY_HPP_

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdgtag/sdg.hpp"
#include "sdgtag/textprep.hpp"

namespace sdgtag {

enum class SourceFormat { kCsv, kJson };

// "csv" or "json" (case-insensitive); nullopt otherwise.
std::optional<SourceFormat> parse_source_format(std::string_view name);
std::string_view to_string(SourceFormat format);

// Descriptor for one input dataset (one row of the source registry).
struct SourceMetadata {
  std::string source_id;
  std::string name;
  std::string origin;  // URL or free-form provenance note

  friend bool operator==(const SourceMetadata&, const SourceMetadata&) = default;
};

struct RawItem {
  std::string term;
  SdgId sdg;
};

struct SourceDataset {
  SourceMetadata meta;
  std::vector<RawItem> items;
};

struct ParsedSource {
  SourceDataset dataset;
  // Row-level diagnostics for rejected rows ("line 4: SDG 18 out of range").
  std::vector<std::string> warnings;
};

// Parses a term/SDG dataset. CSV needs a header with `term` and `sdg`
// columns; JSON is an array of {"term": string, "sdg": int}. Bad rows are
// skipped with a warning; more than half of the rows rejected, an unreadable
// file, or a malformed header raise ParseError.
ParsedSource parse_source_dataset(const std::filesystem::path& path,
                                  SourceFormat format, SourceMetadata meta);
ParsedSource parse_source_text(std::string_view text, SourceFormat format,
                               SourceMetadata meta);

struct OntologyItem {
  NormalizedTerm term;
  SdgId sdg;
  std::set<std::string> provenance;  // never empty

  friend bool operator==(const OntologyItem&, const OntologyItem&) = default;
};

// Flat, provenance-tracked set of (term, SDG) key-terms. Items are kept
// sorted by (term, sdg); the object is immutable once constructed.
class Ontology {
 public:
  // Validates uniqueness of (term, sdg), nonempty provenance, and that each
  // provenance id is registered. Throws ParseError on violation.
  Ontology(std::vector<OntologyItem> items, std::vector<SourceMetadata> registry,
           std::string created_at);

  const std::vector<OntologyItem>& items() const noexcept { return items_; }
  const std::vector<SourceMetadata>& source_registry() const noexcept {
    return registry_;
  }
  const std::string& created_at() const noexcept { return created_at_; }
  std::size_t size() const noexcept { return items_.size(); }

  nlohmann::ordered_json to_json() const;
  static Ontology from_json(const nlohmann::json& doc);

  // Pretty-printed JSON with a trailing newline. Byte-stable for equal input.
  void save(const std::filesystem::path& path) const;
  static Ontology load(const std::filesystem::path& path);

 private:
  std::vector<OntologyItem> items_;
  std::vector<SourceMetadata> registry_;
  std::string created_at_;
};

struct MergeResult {
  Ontology ontology;
  std::vector<std::string> warnings;
};

// Normalizes every raw term and collapses equal (term, sdg) pairs, taking
// the union of their source ids. Terms that normalize to nothing are
// dropped with a warning. Throws DuplicateSourceError on a repeated
// source_id. The registry keeps the sources' input order.
MergeResult merge_sources(const std::vector<SourceDataset>& sources,
                          std::string created_at);

// Re-exports an ontology's items as one raw source (for re-ingestion).
SourceDataset ontology_as_source(const Ontology& ontology, SourceMetadata meta);

struct StatsReport {
  std::size_t total = 0;
  std::array<std::size_t, kSdgCount> per_sdg{};  // index 0 is SDG 1
  std::map<std::string, std::size_t> per_source;  // items citing each source
  std::size_t multi_provenance = 0;

  nlohmann::ordered_json to_json() const;
};

StatsReport ontology_stats(const Ontology& ontology);

}  // namespace sdgtag

#endif  // SDGTAG_ONTOLOGY_HPP_
