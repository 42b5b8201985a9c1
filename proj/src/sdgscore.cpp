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

#include "sdgtag/sdgscore.hpp"

#include <algorithm>
#include <utility>

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ThresholdPair checked(ThresholdPair pair, std::string_view what) {
  if (!(pair.moderate >= 0.0 && pair.moderate < pair.strong && pair.strong <= 1.0)) {
    throw ConfigError("thresholds for " + std::string(what) +
                      " must satisfy 0 <= moderate < strong <= 1 (got moderate " +
                      std::to_string(pair.moderate) + ", strong " +
                      std::to_string(pair.strong) + ")");
  }
  return pair;
}

ThresholdPair pair_from_json(const json& entry, std::string_view what) {
  if (!entry.is_object() || !entry.contains("moderate") || !entry.contains("strong") ||
      !entry["moderate"].is_number() || !entry["strong"].is_number()) {
    throw ConfigError("thresholds for " + std::string(what) +
                      " must be {\"moderate\": number, \"strong\": number}");
  }
  return checked({entry["moderate"].get<double>(), entry["strong"].get<double>()}, what);
}

std::array<SdgScore, kSdgCount> empty_scores() {
  return [] <std::size_t... I>(std::index_sequence<I...>) {
    return std::array<SdgScore, kSdgCount>{SdgScore{SdgId(static_cast<int>(I) + 1)}...};
  }(std::make_index_sequence<kSdgCount>{});
}

}  // namespace

std::string_view to_string(Label label) {
  switch (label) {
    case Label::kStrong:
      return "Strong";
    case Label::kModerate:
      return "Moderate";
    case Label::kNone:
      break;
  }
  return "None";
}

std::optional<Label> parse_label(std::string_view text) {
  if (text == "Strong") return Label::kStrong;
  if (text == "Moderate") return Label::kModerate;
  if (text == "None") return Label::kNone;
  return std::nullopt;
}

ThresholdConfig::ThresholdConfig() { pairs_.fill(ThresholdPair{}); }

ThresholdConfig::ThresholdConfig(const std::array<ThresholdPair, kSdgCount>& pairs)
    : pairs_(pairs) {
  for (int s = 1; s <= kSdgCount; ++s) {
    checked(pairs_[static_cast<std::size_t>(s - 1)], "SDG " + std::to_string(s));
  }
}

ThresholdConfig ThresholdConfig::from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("threshold config must be a JSON object");
  if (!doc.contains("default")) {
    throw ConfigError("threshold config is missing the \"default\" entry");
  }
  std::array<ThresholdPair, kSdgCount> pairs;
  pairs.fill(pair_from_json(doc["default"], "default"));
  for (const auto& [key, value] : doc.items()) {
    if (key == "default") continue;
    int number = 0;
    bool numeric = !key.empty() && key.size() <= 2 &&
                   std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (numeric) number = std::stoi(key);
    if (!numeric || !SdgId::valid(number)) {
      throw ConfigError("threshold config: unknown key '" + key + "'");
    }
    pairs[static_cast<std::size_t>(number - 1)] = pair_from_json(value, "SDG " + key);
  }
  return ThresholdConfig(pairs);
}

ThresholdConfig ThresholdConfig::load(const std::filesystem::path& path) {
  try {
    return from_json(json::parse(read_file(path)));
  } catch (const json::parse_error& e) {
    throw ConfigError("'" + path.string() + "': invalid JSON: " + e.what());
  }
}

ordered_json ThresholdConfig::to_json() const {
  ordered_json doc = ordered_json::object();
  ThresholdPair fallback{};
  doc["default"] = {{"moderate", fallback.moderate}, {"strong", fallback.strong}};
  for (int s = 1; s <= kSdgCount; ++s) {
    const auto& p = pairs_[static_cast<std::size_t>(s - 1)];
    doc[std::to_string(s)] = {{"moderate", p.moderate}, {"strong", p.strong}};
  }
  return doc;
}

std::string ThresholdConfig::digest() const {
  return "sha256:" + sha256_hex(to_json().dump());
}

std::array<SdgOverlap, kSdgCount> score_sdgs(const std::vector<FosTag>& tags,
                                             const SdgFosMap& map) {
  const double denom = static_cast<double>(std::max<std::size_t>(1, tags.size()));
  std::array<SdgOverlap, kSdgCount> out = [] <std::size_t... I>(std::index_sequence<I...>) {
    return std::array<SdgOverlap, kSdgCount>{SdgOverlap{SdgId(static_cast<int>(I) + 1)}...};
  }(std::make_index_sequence<kSdgCount>{});
  for (auto& overlap : out) {
    const auto& fos = map[overlap.sdg];
    for (const auto& tag : tags) {
      if (fos.count(tag.fos_id)) ++overlap.overlap_count;
    }
    overlap.overlap_share = static_cast<double>(overlap.overlap_count) / denom;
  }
  return out;
}

Label interpret_score(double share, SdgId sdg, const ThresholdConfig& cfg) {
  const ThresholdPair& t = cfg[sdg];
  if (share >= t.strong) return Label::kStrong;
  if (share >= t.moderate) return Label::kModerate;
  return Label::kNone;
}

std::vector<SdgId> Classification::with_label(Label label) const {
  std::vector<SdgId> out;
  for (const auto& s : scores) {
    if (s.label == label) out.push_back(s.sdg);
  }
  return out;
}

ordered_json Classification::to_json() const {
  ordered_json tags = ordered_json::array();
  for (const auto& t : fos_tags) {
    tags.push_back({{"fos_id", t.fos_id}, {"similarity", t.similarity}});
  }
  ordered_json sdgs = ordered_json::array();
  for (const auto& s : scores) {
    sdgs.push_back({{"sdg", s.sdg.number()},
                    {"overlap_count", s.overlap_count},
                    {"overlap_share", s.overlap_share},
                    {"label", to_string(s.label)}});
  }
  return ordered_json{{"input_digest", input_digest},
                      {"engine_version", engine_version},
                      {"fos_tags", std::move(tags)},
                      {"scores", std::move(sdgs)}};
}

Classification Classification::from_json(const json& doc) {
  Classification c{"", {}, empty_scores(), ""};
  try {
    c.input_digest = doc.at("input_digest").get<std::string>();
    c.engine_version = doc.at("engine_version").get<std::string>();
    for (const auto& t : doc.at("fos_tags")) {
      c.fos_tags.push_back(FosTag{t.at("fos_id").get<std::string>(),
                                  t.at("similarity").get<double>()});
    }
    const json& scores = doc.at("scores");
    if (!scores.is_array() || scores.size() != kSdgCount) {
      throw ParseError("classification must carry exactly 17 scores");
    }
    for (std::size_t i = 0; i < kSdgCount; ++i) {
      const json& s = scores[i];
      if (s.at("sdg").get<int>() != static_cast<int>(i) + 1) {
        throw ParseError("classification scores must be ordered by SDG");
      }
      auto label = parse_label(s.at("label").get<std::string>());
      if (!label) throw ParseError("unknown label " + s.at("label").dump());
      c.scores[i].overlap_count = s.at("overlap_count").get<std::size_t>();
      c.scores[i].overlap_share = s.at("overlap_share").get<double>();
      c.scores[i].label = *label;
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed classification: ") + e.what());
  }
  return c;
}

std::string engine_version() { return std::string("sdgtag/") + SDGTAG_VERSION; }

std::string input_digest(std::string_view text) { return "sha256:" + sha256_hex(text); }

Classification classify_text(std::string_view text, const FosIndex& index,
                             const SdgFosMap& map, const ThresholdConfig& cfg,
                             const TagOptions& options) {
  Classification c{input_digest(text), index.tag(text, options), empty_scores(),
                   engine_version()};
  auto overlaps = score_sdgs(c.fos_tags, map);
  for (std::size_t i = 0; i < kSdgCount; ++i) {
    c.scores[i].overlap_count = overlaps[i].overlap_count;
    c.scores[i].overlap_share = overlaps[i].overlap_share;
    c.scores[i].label = interpret_score(overlaps[i].overlap_share, c.scores[i].sdg, cfg);
  }
  return c;
}

}  // namespace sdgtag
