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

#include "sdgtag/feedback.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>

#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json FeedbackRecord::to_json() const {
  std::vector<int> sdgs;
  for (SdgId s : suggested_sdgs) sdgs.push_back(s.number());
  ordered_json doc{{"input_digest", input_digest}, {"suggested_sdgs", sdgs}};
  doc["free_text"] = free_text ? ordered_json(*free_text) : ordered_json(nullptr);
  doc["submitted_at"] = submitted_at;
  doc["engine_version"] = engine_version;
  return doc;
}

FeedbackRecord FeedbackRecord::from_json(const json& doc) {
  try {
    FeedbackRecord r;
    r.input_digest = doc.at("input_digest").get<std::string>();
    if (r.input_digest.empty()) throw ParseError("feedback: empty input_digest");
    for (const auto& v : doc.at("suggested_sdgs")) {
      if (!v.is_number_integer() || !SdgId::valid(v.get<long long>())) {
        throw ParseError("feedback: invalid SDG " + v.dump());
      }
      r.suggested_sdgs.emplace_back(v.get<int>());
    }
    if (r.suggested_sdgs.empty()) throw ParseError("feedback: empty suggested_sdgs");
    std::sort(r.suggested_sdgs.begin(), r.suggested_sdgs.end());
    r.suggested_sdgs.erase(std::unique(r.suggested_sdgs.begin(), r.suggested_sdgs.end()),
                           r.suggested_sdgs.end());
    if (doc.contains("free_text") && !doc["free_text"].is_null()) {
      r.free_text = doc["free_text"].get<std::string>();
    }
    r.submitted_at = doc.value("submitted_at", "");
    r.engine_version = doc.value("engine_version", "");
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("feedback: ") + e.what());
  }
}

FeedbackStore::FeedbackStore(std::filesystem::path path) : path_(std::move(path)) {
  fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw Error("cannot open feedback store '" + path_.string() + "': " + std::strerror(errno));
  }
  std::string existing = read_file(path_);
  lines_ = static_cast<std::size_t>(std::count(existing.begin(), existing.end(), '\n'));
}

FeedbackStore::~FeedbackStore() {
  if (fd_ >= 0) ::close(fd_);
}

std::size_t FeedbackStore::append(const FeedbackRecord& record) {
  std::string line = record.to_json().dump() + "\n";
  std::lock_guard lock(mutex_);
  const char* data = line.data();
  std::size_t left = line.size();
  while (left > 0) {
    ssize_t n = ::write(fd_, data, left);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error("feedback store write failed: " + std::string(std::strerror(errno)));
    }
    data += n;
    left -= static_cast<std::size_t>(n);
  }
  if (::fsync(fd_) != 0) {
    throw Error("feedback store fsync failed: " + std::string(std::strerror(errno)));
  }
  return ++lines_;
}

std::size_t FeedbackStore::size() const {
  std::lock_guard lock(mutex_);
  return lines_;
}

std::vector<FeedbackRecord> FeedbackStore::read_all(const std::filesystem::path& path) {
  std::string text = read_file(path);
  std::vector<FeedbackRecord> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    try {
      out.push_back(FeedbackRecord::from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw ParseError("feedback store line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace sdgtag
