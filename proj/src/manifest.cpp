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

#include "sdgtag/manifest.hpp"

#include <cstdlib>

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return (path.is_absolute() ? path : base / path).lexically_normal();
}

template <typename T>
T get(const json& obj, const char* key, const char* where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("manifest: '") + where + key + "' is missing or has the wrong type");
  }
}

template <typename T>
std::optional<T> get_opt(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || obj[key].is_null()) return std::nullopt;
  return get<T>(obj, key, where);
}

std::optional<fs::path> opt_path(const json& obj, const char* key, const char* where,
                                 const fs::path& base) {
  auto s = get_opt<std::string>(obj, key, where);
  if (!s) return std::nullopt;
  return resolve(base, *s);
}

ordered_json opt_json(const std::optional<fs::path>& p) {
  return p ? ordered_json(p->string()) : ordered_json(nullptr);
}

}  // namespace

PipelineManifest PipelineManifest::from_json(const json& doc, const fs::path& base_dir) {
  if (!doc.is_object()) throw ConfigError("manifest: top level must be an object");
  PipelineManifest m;
  const json& sources = doc.contains("sources") ? doc["sources"] : json();
  if (!sources.is_array() || sources.empty()) {
    throw ConfigError("manifest: 'sources' must be a nonempty array");
  }
  for (const auto& s : sources) {
    ManifestSource src;
    src.meta.source_id = get<std::string>(s, "source_id", "sources[].");
    src.meta.name = s.value("name", src.meta.source_id);
    src.meta.origin = s.value("origin", "");
    src.path = resolve(base_dir, get<std::string>(s, "path", "sources[]."));
    auto fmt_name = s.value("format", src.path.extension() == ".json" ? "json" : "csv");
    auto fmt = parse_source_format(fmt_name);
    if (!fmt) throw ConfigError("manifest: unknown source format '" + fmt_name + "'");
    src.format = *fmt;
    m.sources.push_back(std::move(src));
  }
  m.fos_catalog = resolve(base_dir, get<std::string>(doc, "fos_catalog", ""));
  m.fos_corpus = resolve(base_dir, get<std::string>(doc, "fos_corpus", ""));
  m.thresholds = opt_path(doc, "thresholds", "", base_dir);
  m.stopwords = opt_path(doc, "stopwords", "", base_dir);
  m.link_threshold = get_opt<double>(doc, "link_threshold", "").value_or(kDefaultLinkThreshold);
  m.tag.top_k = get_opt<std::size_t>(doc, "top_k", "").value_or(m.tag.top_k);
  m.tag.min_sim = get_opt<double>(doc, "min_sim", "").value_or(m.tag.min_sim);
  m.output_dir = resolve(base_dir, doc.value("output_dir", m.output_dir.string()));
  m.created_at = get_opt<std::string>(doc, "created_at", "");

  if (doc.contains("doi")) {
    const json& d = doc["doi"];
    m.doi_fixture = opt_path(d, "fixture", "doi.", base_dir);
    m.doi.base_url = get_opt<std::string>(d, "base_url", "doi.").value_or(m.doi.base_url);
    if (auto t = get_opt<long long>(d, "timeout_ms", "doi.")) m.doi.timeout = std::chrono::milliseconds(*t);
    m.doi.user_agent = get_opt<std::string>(d, "user_agent", "doi.").value_or(m.doi.user_agent);
    m.doi.max_in_flight = get_opt<std::size_t>(d, "max_in_flight", "doi.").value_or(m.doi.max_in_flight);
    if (auto t = get_opt<long long>(d, "min_interval_ms", "doi.")) {
      m.doi.min_interval = std::chrono::milliseconds(*t);
    }
  }
  if (doc.contains("service")) {
    const json& s = doc["service"];
    m.host = get_opt<std::string>(s, "host", "service.").value_or(m.host);
    m.port = get_opt<int>(s, "port", "service.").value_or(m.port);
    m.feedback_store = resolve(
        base_dir, get_opt<std::string>(s, "feedback_store", "service.").value_or(m.feedback_store));
    m.max_text_length =
        get_opt<std::size_t>(s, "max_text_length", "service.").value_or(m.max_text_length);
    m.doi_batch_cap = get_opt<std::size_t>(s, "doi_batch_cap", "service.").value_or(m.doi_batch_cap);
    m.static_dir = opt_path(s, "static_dir", "service.", base_dir);
  } else {
    m.feedback_store = resolve(base_dir, m.feedback_store.string());
  }
  if (!(m.link_threshold > 0.0 && m.link_threshold <= 1.0)) {
    throw ConfigError("manifest: 'link_threshold' must be in (0, 1]");
  }
  if (m.tag.top_k < 1) throw ConfigError("manifest: 'top_k' must be >= 1");
  return m;
}

PipelineManifest PipelineManifest::load(const fs::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ConfigError("manifest '" + path.string() + "' is not valid JSON");
  fs::path base = fs::absolute(path).parent_path();
  return from_json(doc, base);
}

ordered_json PipelineManifest::to_json() const {
  ordered_json sources = ordered_json::array();
  for (const auto& s : this->sources) {
    sources.push_back({{"source_id", s.meta.source_id},
                       {"name", s.meta.name},
                       {"origin", s.meta.origin},
                       {"path", s.path.string()},
                       {"format", to_string(s.format)}});
  }
  ordered_json doc{{"sources", sources},
                   {"fos_catalog", fos_catalog.string()},
                   {"fos_corpus", fos_corpus.string()},
                   {"thresholds", opt_json(thresholds)},
                   {"stopwords", opt_json(stopwords)},
                   {"link_threshold", link_threshold},
                   {"top_k", tag.top_k},
                   {"min_sim", tag.min_sim},
                   {"output_dir", output_dir.string()}};
  doc["created_at"] = created_at ? ordered_json(*created_at) : ordered_json(nullptr);
  doc["doi"] = {{"fixture", opt_json(doi_fixture)},
                {"base_url", doi.base_url},
                {"timeout_ms", doi.timeout.count()},
                {"user_agent", doi.user_agent},
                {"max_in_flight", doi.max_in_flight},
                {"min_interval_ms", doi.min_interval.count()}};
  doc["service"] = {{"host", host},
                    {"port", port},
                    {"feedback_store", feedback_store.string()},
                    {"max_text_length", max_text_length},
                    {"doi_batch_cap", doi_batch_cap},
                    {"static_dir", opt_json(static_dir)}};
  return doc;
}

void PipelineManifest::save(const fs::path& path) const {
  write_file(path, to_json().dump(2) + "\n");
}

EngineConfig PipelineManifest::engine_config() const {
  EngineConfig c;
  c.ontology = ontology_path();
  c.fos_catalog = fos_catalog;
  std::error_code ec;
  if (fs::is_regular_file(index_path(), ec)) c.fos_index = index_path();
  c.fos_corpus = fos_corpus;
  c.thresholds = thresholds;
  c.stopwords = stopwords;
  c.link_threshold = link_threshold;
  c.tag = tag;
  return c;
}

ServiceConfig PipelineManifest::service_config() const {
  ServiceConfig c;
  c.host = host;
  c.port = port;
  c.engine = engine_config();
  c.feedback_store = feedback_store;
  c.doi_fixture = doi_fixture;
  c.doi = apply_environment(doi);
  c.max_text_length = max_text_length;
  c.doi_batch_cap = doi_batch_cap;
  c.static_dir = static_dir;
  return c;
}

std::string resolve_created_at(const PipelineManifest& manifest) {
  if (manifest.created_at) return *manifest.created_at;
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH"); sde && *sde) {
    char* end = nullptr;
    long long v = std::strtoll(sde, &end, 10);
    if (end && *end == '\0') return utc_timestamp(v);
    throw ConfigError(std::string("SOURCE_DATE_EPOCH is not an integer: '") + sde + "'");
  }
  return utc_timestamp(0);
}

}  // namespace sdgtag
