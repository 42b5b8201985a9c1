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

#ifndef SDGTAG_DIGEST_HPP_
#define SDGTAG_DIGEST_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace sdgtag {

// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

// "sha256:<hex>" of a file's contents. Throws ParseError if unreadable.
std::string file_digest(const std::filesystem::path& path);

// Reads a whole file. Throws ParseError naming the path on failure.
std::string read_file(const std::filesystem::path& path);

// Writes a whole file, replacing any existing content.
void write_file(const std::filesystem::path& path, std::string_view bytes);

// Current UTC time as ISO-8601 with second precision, e.g. 2026-01-31T12:00:00Z.
std::string utc_timestamp_now();

// Converts seconds since the Unix epoch to the same ISO-8601 form.
std::string utc_timestamp(long long epoch_seconds);

}  // namespace sdgtag

#endif  // SDGTAG_DIGEST_HPP_
