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

#ifndef SDGTAG_CSV_HPP_
#define SDGTAG_CSV_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sdgtag::csv {

// One parsed record plus the 1-based line number it started on.
struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC 4180 reader: comma separated, double-quote quoting with "" escapes,
// quoted fields may span lines, CRLF or LF endings. A leading UTF-8 BOM is
// skipped. Blank lines are ignored. Throws ParseError on an unterminated
// quote.
std::vector<Row> parse(std::string_view text);

// Index of `name` in a header row, if present.
std::optional<std::size_t> column(const Row& header, std::string_view name);

// Quotes a field when it contains a comma, quote, or line break.
std::string escape(std::string_view field);

}  // namespace sdgtag::csv

#endif  // SDGTAG_CSV_HPP_
