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

#ifndef SDGTAG_FEEDBACK_HPP_
#define SDGTAG_FEEDBACK_HPP_

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sdgtag/sdg.hpp"

namespace sdgtag {

// A user's corrected SDG labels for one earlier classification, linked by
// the classification's input_digest.
struct FeedbackRecord {
  std::string input_digest;
  std::vector<SdgId> suggested_sdgs;  // sorted, unique, nonempty
  std::optional<std::string> free_text;
  std::string submitted_at;
  std::string engine_version;

  nlohmann::ordered_json to_json() const;
  // Throws ParseError unless the record is well formed.
  static FeedbackRecord from_json(const nlohmann::json& doc);
};

// Append-only JSON Lines file. Each append is one write(2) of a full line
// under a mutex, followed by fsync, so lines never interleave and accepted
// records survive a restart.
class FeedbackStore {
 public:
  // Opens (creating if needed) the store and counts existing lines.
  explicit FeedbackStore(std::filesystem::path path);
  ~FeedbackStore();
  FeedbackStore(const FeedbackStore&) = delete;
  FeedbackStore& operator=(const FeedbackStore&) = delete;

  // Returns the new record's id (its 1-based line number). Throws Error if
  // the write fails.
  std::size_t append(const FeedbackRecord& record);
  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return path_; }

  // Parses every line; throws ParseError on the first malformed one.
  static std::vector<FeedbackRecord> read_all(const std::filesystem::path& path);

 private:
  std::filesystem::path path_;
  int fd_ = -1;
  mutable std::mutex mutex_;
  std::size_t lines_ = 0;
};

}  // namespace sdgtag

#endif  // SDGTAG_FEEDBACK_HPP_
