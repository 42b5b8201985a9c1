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

#include "sdgtag/engine.hpp"

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::ordered_json;

namespace {

void require_file(const std::filesystem::path& path, std::string_view what) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw ConfigError(std::string(what) + " not found: '" + path.string() + "'");
  }
}

ordered_json error_item(const std::string& input, std::string_view code,
                        const std::string& message) {
  return ordered_json{{"input", input},
                      {"status", "error"},
                      {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

Engine::Engine(Ontology ontology, FosCatalog catalog, LinkTable links, FosIndex index,
               ThresholdConfig thresholds, TagOptions tag, ordered_json digests)
    : ontology_(std::move(ontology)),
      ontology_stats_(ontology_stats(ontology_)),
      catalog_(std::move(catalog)),
      links_(std::move(links)),
      map_(build_sdg_fos_map(links_)),
      index_(std::move(index)),
      thresholds_(std::move(thresholds)),
      tag_(tag),
      digests_(std::move(digests)) {}

std::shared_ptr<const Engine> Engine::load(const EngineConfig& config) {
  require_file(config.ontology, "ontology");
  require_file(config.fos_catalog, "FOS catalog");
  if (config.fos_index) require_file(*config.fos_index, "FOS index snapshot");
  if (!config.fos_index) {
    if (!config.fos_corpus) throw ConfigError("either a FOS index snapshot or a FOS corpus is required");
    require_file(*config.fos_corpus, "FOS corpus");
  }
  if (config.thresholds) require_file(*config.thresholds, "threshold config");
  if (config.stopwords) require_file(*config.stopwords, "stopword list");
  if (config.tag.top_k < 1) throw ConfigError("top_k must be >= 1");
  if (!(config.tag.min_sim >= 0.0 && config.tag.min_sim <= 1.0)) {
    throw ConfigError("min_sim must be in [0, 1]");
  }

  TokenizerConfig tokenizer;
  if (config.stopwords) tokenizer.stopwords = StopwordList::load(*config.stopwords);

  ordered_json digests = ordered_json::object();
  Ontology ontology = Ontology::load(config.ontology);
  digests["ontology"] = file_digest(config.ontology);
  FosCatalog catalog = FosCatalog::load(config.fos_catalog);
  digests["fos_catalog"] = file_digest(config.fos_catalog);

  LinkOptions link_options;
  link_options.threshold = config.link_threshold;
  LinkTable links = link_ontology_to_fos(ontology, catalog, link_options);

  auto index = config.fos_index
                   ? FosIndex::load(*config.fos_index, tokenizer)
                   : FosIndex::build(load_fos_corpus(*config.fos_corpus), tokenizer);
  digests[config.fos_index ? "fos_index" : "fos_corpus"] =
      file_digest(config.fos_index ? *config.fos_index : *config.fos_corpus);
  index.check_against(catalog);

  ThresholdConfig thresholds =
      config.thresholds ? ThresholdConfig::load(*config.thresholds) : ThresholdConfig();
  digests["thresholds"] = thresholds.digest();
  digests["tokenizer"] = tokenizer.digest();

  return std::shared_ptr<const Engine>(new Engine(std::move(ontology), std::move(catalog),
                                                  std::move(links), std::move(index),
                                                  std::move(thresholds), config.tag,
                                                  std::move(digests)));
}

Classification Engine::classify(std::string_view text) const {
  return classify_text(text, index_, map_, thresholds_, tag_);
}

ordered_json Engine::tag_dois(const std::vector<std::string>& raw_dois,
                              MetadataClient& client, std::size_t max_in_flight) const {
  std::vector<ordered_json> items(raw_dois.size());
  std::vector<Doi> valid;
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < raw_dois.size(); ++i) {
    try {
      valid.push_back(validate_doi(raw_dois[i]));
      positions.push_back(i);
    } catch (const InvalidDoiError& e) {
      items[i] = error_item(raw_dois[i], "invalid_doi", e.what());
    }
  }

  auto resolved = resolve_bulk(valid, client, std::max<std::size_t>(1, max_in_flight));
  for (std::size_t k = 0; k < resolved.size(); ++k) {
    const std::string& input = raw_dois[positions[k]];
    ordered_json& item = items[positions[k]];
    if (const auto* err = std::get_if<ResolveError>(&resolved[k])) {
      item = error_item(input, to_string(err->kind), err->message);
      item["doi"] = valid[k].str();
      continue;
    }
    const auto& ok = std::get<ResolvedAbstract>(resolved[k]);
    item = ordered_json{{"input", input}, {"doi", ok.doi.str()}, {"status", "ok"}};
    item["title"] = ok.title ? ordered_json(*ok.title) : ordered_json(nullptr);
    item["source"] = ok.source;
    item["classification"] = classify(ok.abstract_text).to_json();
  }
  return ordered_json{{"results", std::move(items)}};
}

ordered_json Engine::stats() const {
  return ordered_json{
      {"engine_version", engine_version()},
      {"ontology", ontology_stats_.to_json()},
      {"fos_catalog_size", catalog_.size()},
      {"fos_index", {{"fos_count", index_.size()}, {"vocabulary_size", index_.vocabulary_size()}}},
      {"link_table_size", links_.size()},
      {"linked_fos", map_.distinct_fos()},
      {"link_threshold", links_.threshold()},
      {"threshold_digest", thresholds_.digest()}};
}

}  // namespace sdgtag
