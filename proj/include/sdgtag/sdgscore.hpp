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

#ifndef SDGTAG_SDGSCORE_HPP_
#define SDGTAG_SDGSCORE_HPP_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sdgtag/fostag.hpp"
#include "sdgtag/fuzzylink.hpp"
#include "sdgtag/sdg.hpp"

namespace sdgtag {

// Ordered None < Moderate < Strong.
enum class Label { kNone = 0, kModerate = 1, kStrong = 2 };

std::string_view to_string(Label label);
std::optional<Label> parse_label(std::string_view text);

struct SdgOverlap {
  SdgId sdg;
  std::size_t overlap_count = 0;
  double overlap_share = 0.0;  // overlap_count / max(1, number of tags)

  friend bool operator==(const SdgOverlap&, const SdgOverlap&) = default;
};

struct SdgScore {
  SdgId sdg;
  std::size_t overlap_count = 0;
  double overlap_share = 0.0;
  Label label = Label::kNone;

  friend bool operator==(const SdgScore&, const SdgScore&) = default;
};

struct ThresholdPair {
  double moderate = 0.1;
  double strong = 0.3;

  friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
};

// Per-SDG Moderate/Strong cut-offs; 0 <= moderate < strong <= 1 for each.
class ThresholdConfig {
 public:
  // Every goal at moderate 0.1, strong 0.3.
  ThresholdConfig();
  // Throws ConfigError if any pair violates the ordering.
  explicit ThresholdConfig(const std::array<ThresholdPair, kSdgCount>& pairs);

  const ThresholdPair& operator[](SdgId sdg) const { return pairs_[sdg.index()]; }
  const std::array<ThresholdPair, kSdgCount>& pairs() const noexcept { return pairs_; }

  // {"default": {"moderate": m, "strong": s}, "7": {...}, ...}. "default"
  // is required and fills every goal without its own entry.
  static ThresholdConfig from_json(const nlohmann::json& doc);
  static ThresholdConfig load(const std::filesystem::path& path);
  // All 17 goals spelled out, plus the shipped default entry.
  nlohmann::ordered_json to_json() const;
  // sha256 over the canonical to_json() dump.
  std::string digest() const;

  friend bool operator==(const ThresholdConfig&, const ThresholdConfig&) = default;

 private:
  std::array<ThresholdPair, kSdgCount> pairs_;
};

// For each goal s: |{tag fos_ids} ∩ map[s]| and that count over
// max(1, |tags|). Tags must have distinct fos_ids.
std::array<SdgOverlap, kSdgCount> score_sdgs(const std::vector<FosTag>& tags,
                                             const SdgFosMap& map);

// Strong if share >= strong, else Moderate if share >= moderate, else None.
Label interpret_score(double share, SdgId sdg, const ThresholdConfig& cfg);

struct Classification {
  std::string input_digest;  // "sha256:<hex>" of the input bytes
  std::vector<FosTag> fos_tags;
  std::array<SdgScore, kSdgCount> scores;  // SDG 1..17 in order
  std::string engine_version;

  std::vector<SdgId> with_label(Label label) const;

  nlohmann::ordered_json to_json() const;
  static Classification from_json(const nlohmann::json& doc);

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string engine_version();
std::string input_digest(std::string_view text);

// tag_fos -> score_sdgs -> interpret_score for every goal.
Classification classify_text(std::string_view text, const FosIndex& index,
                             const SdgFosMap& map, const ThresholdConfig& cfg,
                             const TagOptions& options = {});

}  // namespace sdgtag

#endif  // SDGTAG_SDGSCORE_HPP_
