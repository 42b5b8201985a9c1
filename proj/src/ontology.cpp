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

#include "sdgtag/ontology.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "sdgtag/csv.hpp"
#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Parses a base-10 integer that must consume the whole field.
std::optional<long long> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// Shared accept/reject bookkeeping for both source formats.
class RowCollector {
 public:
  explicit RowCollector(ParsedSource& out) : out_(out) {}

  void accept(std::string_view where, std::string_view term,
              std::optional<long long> sdg, std::string_view sdg_text) {
    ++rows_;
    if (trim(term).empty()) {
      reject(std::string(where) + ": empty term");
    } else if (!sdg) {
      reject(std::string(where) + ": SDG '" + std::string(sdg_text) +
             "' is not an integer");
    } else if (!SdgId::valid(*sdg)) {
      reject(std::string(where) + ": SDG " + std::to_string(*sdg) +
             " out of range 1..17");
    } else {
      out_.dataset.items.push_back(
          RawItem{std::string(term), SdgId(static_cast<int>(*sdg))});
    }
  }

  void reject(std::string message) {
    ++rejected_;
    out_.warnings.push_back(std::move(message));
  }

  void count_row() { ++rows_; }

  void finish(std::string_view origin) const {
    if (rows_ > 0 && rejected_ * 2 > rows_) {
      throw ParseError(std::string(origin) + ": " + std::to_string(rejected_) +
                       " of " + std::to_string(rows_) +
                       " rows rejected; wrong file format?");
    }
  }

 private:
  ParsedSource& out_;
  std::size_t rows_ = 0;
  std::size_t rejected_ = 0;
};

void parse_csv_source(std::string_view text, ParsedSource& out) {
  auto rows = csv::parse(text);
  const std::string& id = out.dataset.meta.source_id;
  if (rows.empty()) {
    throw ParseError("source '" + id + "': missing header (expected term,sdg)");
  }
  auto term_col = csv::column(rows.front(), "term");
  auto sdg_col = csv::column(rows.front(), "sdg");
  if (!term_col || !sdg_col) {
    throw ParseError("source '" + id + "': malformed header (expected term,sdg)");
  }
  RowCollector collector(out);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    std::string where = "line " + std::to_string(row.line);
    std::size_t need = std::max(*term_col, *sdg_col) + 1;
    if (row.fields.size() < need) {
      collector.count_row();
      collector.reject(where + ": expected at least " + std::to_string(need) +
                       " fields, got " + std::to_string(row.fields.size()));
      continue;
    }
    const std::string& sdg_text = row.fields[*sdg_col];
    collector.accept(where, row.fields[*term_col], parse_int(sdg_text), sdg_text);
  }
  collector.finish("source '" + id + "'");
}

void parse_json_source(std::string_view text, ParsedSource& out) {
  const std::string& id = out.dataset.meta.source_id;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("source '" + id + "': invalid JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw ParseError("source '" + id + "': expected a JSON array of records");
  }
  RowCollector collector(out);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& rec = doc[i];
    std::string where = "record " + std::to_string(i);
    if (!rec.is_object() || !rec.contains("term") || !rec.contains("sdg") ||
        !rec["term"].is_string()) {
      collector.count_row();
      collector.reject(where + ": expected {\"term\": string, \"sdg\": int}");
      continue;
    }
    const json& sdg = rec["sdg"];
    std::optional<long long> number;
    if (sdg.is_number_integer()) number = sdg.get<long long>();
    collector.accept(where, rec["term"].get_ref<const std::string&>(), number,
                     sdg.dump());
  }
  collector.finish("source '" + id + "'");
}

}  // namespace

std::optional<SourceFormat> parse_source_format(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "csv") return SourceFormat::kCsv;
  if (lower == "json") return SourceFormat::kJson;
  return std::nullopt;
}

std::string_view to_string(SourceFormat format) {
  return format == SourceFormat::kCsv ? "csv" : "json";
}

ParsedSource parse_source_text(std::string_view text, SourceFormat format,
                               SourceMetadata meta) {
  if (meta.source_id.empty()) throw ParseError("source_id must be nonempty");
  ParsedSource out{SourceDataset{std::move(meta), {}}, {}};
  if (format == SourceFormat::kCsv) {
    parse_csv_source(text, out);
  } else {
    parse_json_source(text, out);
  }
  return out;
}

ParsedSource parse_source_dataset(const std::filesystem::path& path,
                                  SourceFormat format, SourceMetadata meta) {
  return parse_source_text(read_file(path), format, std::move(meta));
}

Ontology::Ontology(std::vector<OntologyItem> items,
                   std::vector<SourceMetadata> registry, std::string created_at)
    : items_(std::move(items)),
      registry_(std::move(registry)),
      created_at_(std::move(created_at)) {
  std::unordered_set<std::string> ids;
  for (const auto& meta : registry_) {
    if (meta.source_id.empty()) throw ParseError("registry entry with empty source_id");
    if (!ids.insert(meta.source_id).second) {
      throw ParseError("duplicate source_id '" + meta.source_id + "' in registry");
    }
  }
  std::sort(items_.begin(), items_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.term, a.sdg) < std::tie(b.term, b.sdg);
  });
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& item = items_[i];
    if (i > 0 && items_[i - 1].term == item.term && items_[i - 1].sdg == item.sdg) {
      throw ParseError("duplicate ontology item ('" + item.term.str() + "', " +
                       to_string(item.sdg) + ")");
    }
    if (item.provenance.empty()) {
      throw ParseError("ontology item '" + item.term.str() + "' has no provenance");
    }
    for (const auto& src : item.provenance) {
      if (!ids.count(src)) {
        throw ParseError("ontology item '" + item.term.str() +
                         "' cites unregistered source '" + src + "'");
      }
    }
  }
}

ordered_json Ontology::to_json() const {
  ordered_json registry = ordered_json::array();
  for (const auto& meta : registry_) {
    registry.push_back({{"source_id", meta.source_id},
                        {"name", meta.name},
                        {"origin", meta.origin}});
  }
  ordered_json items = ordered_json::array();
  for (const auto& item : items_) {
    items.push_back({{"term", item.term.str()},
                     {"sdg", item.sdg.number()},
                     {"provenance", item.provenance}});
  }
  return ordered_json{{"format", "sdgtag-ontology"},
                      {"version", 1},
                      {"created_at", created_at_},
                      {"source_registry", std::move(registry)},
                      {"items", std::move(items)}};
}

Ontology Ontology::from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "sdgtag-ontology") {
      throw ParseError("not an sdgtag ontology document");
    }
    if (doc.at("version").get<int>() != 1) {
      throw ParseError("unsupported ontology version " + doc.at("version").dump());
    }
    std::vector<SourceMetadata> registry;
    for (const auto& entry : doc.at("source_registry")) {
      registry.push_back(SourceMetadata{entry.at("source_id").get<std::string>(),
                                        entry.value("name", ""),
                                        entry.value("origin", "")});
    }
    std::vector<OntologyItem> items;
    for (const auto& entry : doc.at("items")) {
      int sdg = entry.at("sdg").get<int>();
      if (!SdgId::valid(sdg)) {
        throw ParseError("ontology item with SDG " + std::to_string(sdg));
      }
      items.push_back(OntologyItem{
          NormalizedTerm::from_normalized(entry.at("term").get<std::string>()),
          SdgId(sdg), entry.at("provenance").get<std::set<std::string>>()});
    }
    return Ontology(std::move(items), std::move(registry),
                    doc.value("created_at", ""));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ontology JSON: ") + e.what());
  } catch (const EmptyTermError& e) {
    throw ParseError(std::string("malformed ontology JSON: ") + e.what());
  }
}

void Ontology::save(const std::filesystem::path& path) const {
  write_file(path, to_json().dump(2) + "\n");
}

Ontology Ontology::load(const std::filesystem::path& path) {
  std::string text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "': invalid JSON: " + e.what());
  }
  return from_json(doc);
}

MergeResult merge_sources(const std::vector<SourceDataset>& sources,
                          std::string created_at) {
  std::vector<SourceMetadata> registry;
  std::unordered_set<std::string> seen;
  for (const auto& src : sources) {
    if (!seen.insert(src.meta.source_id).second) {
      throw DuplicateSourceError("source_id '" + src.meta.source_id +
                                 "' appears more than once");
    }
    registry.push_back(src.meta);
  }

  std::map<std::pair<NormalizedTerm, SdgId>, std::set<std::string>> merged;
  std::vector<std::string> warnings;
  for (const auto& src : sources) {
    for (const auto& raw : src.items) {
      auto term = try_normalize_term(raw.term);
      if (!term) {
        warnings.push_back("source '" + src.meta.source_id + "': term '" +
                           raw.term + "' (SDG " + to_string(raw.sdg) +
                           ") is empty after normalization; dropped");
        continue;
      }
      merged[{std::move(*term), raw.sdg}].insert(src.meta.source_id);
    }
  }

  std::vector<OntologyItem> items;
  items.reserve(merged.size());
  for (auto& [key, provenance] : merged) {
    items.push_back(OntologyItem{key.first, key.second, std::move(provenance)});
  }
  return MergeResult{
      Ontology(std::move(items), std::move(registry), std::move(created_at)),
      std::move(warnings)};
}

SourceDataset ontology_as_source(const Ontology& ontology, SourceMetadata meta) {
  SourceDataset out{std::move(meta), {}};
  out.items.reserve(ontology.size());
  for (const auto& item : ontology.items()) {
    out.items.push_back(RawItem{item.term.str(), item.sdg});
  }
  return out;
}

StatsReport ontology_stats(const Ontology& ontology) {
  StatsReport report;
  for (const auto& meta : ontology.source_registry()) report.per_source[meta.source_id] = 0;
  for (const auto& item : ontology.items()) {
    ++report.total;
    ++report.per_sdg[item.sdg.index()];
    for (const auto& src : item.provenance) ++report.per_source[src];
    if (item.provenance.size() > 1) ++report.multi_provenance;
  }
  return report;
}

ordered_json StatsReport::to_json() const {
  ordered_json sdgs = ordered_json::object();
  for (int s = 1; s <= kSdgCount; ++s) {
    sdgs[std::to_string(s)] = per_sdg[static_cast<std::size_t>(s - 1)];
  }
  ordered_json sources = ordered_json::object();
  for (const auto& [id, n] : per_source) sources[id] = n;
  return ordered_json{{"total_items", total},
                      {"per_sdg", std::move(sdgs)},
                      {"per_source", std::move(sources)},
                      {"multi_provenance_items", multi_provenance}};
}

}  // namespace sdgtag
