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

#include "sdgtag/doiresolve.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

using nlohmann::json;

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool starts_with_nocase(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i]) return false;
  }
  return true;
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string lookup_key(const Doi& doi) { return lower_ascii(doi.str()); }

}  // namespace

Doi validate_doi(std::string_view raw) {
  while (!raw.empty() && is_space(raw.front())) raw.remove_prefix(1);
  while (!raw.empty() && is_space(raw.back())) raw.remove_suffix(1);
  if (raw.empty()) throw InvalidDoiError("empty DOI");

  static constexpr std::string_view kPrefixes[] = {
      "https://doi.org/", "http://doi.org/", "https://dx.doi.org/",
      "http://dx.doi.org/", "doi.org/", "dx.doi.org/", "doi:"};
  for (auto prefix : kPrefixes) {
    if (starts_with_nocase(raw, prefix)) {
      raw.remove_prefix(prefix.size());
      while (!raw.empty() && is_space(raw.front())) raw.remove_prefix(1);
      break;
    }
  }

  std::size_t slash = raw.find('/');
  if (slash == std::string_view::npos) {
    throw InvalidDoiError("'" + std::string(raw) + "' has no '/' between prefix and suffix");
  }
  std::string registrant = lower_ascii(raw.substr(0, slash));
  std::string_view suffix = raw.substr(slash + 1);

  if (registrant.rfind("10.", 0) != 0) {
    throw InvalidDoiError("DOI must start with \"10.\", got '" + std::string(raw) + "'");
  }
  std::string_view code = std::string_view(registrant).substr(3);
  if (code.size() < 4 ||
      !std::all_of(code.begin(), code.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidDoiError("DOI registrant '" + registrant +
                          "' must be \"10.\" followed by at least four digits");
  }
  if (suffix.empty()) throw InvalidDoiError("DOI suffix is empty");
  if (std::any_of(suffix.begin(), suffix.end(), [](char c) {
        return is_space(c) || std::iscntrl(static_cast<unsigned char>(c));
      })) {
    throw InvalidDoiError("DOI suffix contains whitespace or control characters");
  }
  return Doi(registrant + "/" + std::string(suffix));
}

std::string_view to_string(ResolveErrorKind kind) {
  switch (kind) {
    case ResolveErrorKind::kNotFound:
      return "not_found";
    case ResolveErrorKind::kNoAbstract:
      return "no_abstract";
    case ResolveErrorKind::kTransport:
      break;
  }
  return "transport";
}

FixtureClient FixtureClient::parse(std::string_view jsonl) {
  std::map<Doi, Entry> entries;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < jsonl.size()) {
    std::size_t eol = jsonl.find('\n', pos);
    if (eol == std::string_view::npos) eol = jsonl.size();
    std::string_view line = jsonl.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::string where = "DOI fixture line " + std::to_string(line_no);
    try {
      json rec = json::parse(line);
      // Keys are case-folded; DOIs compare case-insensitively.
      Doi doi = validate_doi(lower_ascii(rec.at("doi").get<std::string>()));
      Entry entry{rec.value("title", ""), rec.value("abstract", "")};
      if (!entries.emplace(doi, std::move(entry)).second) {
        throw ParseError(where + ": duplicate DOI " + doi.str());
      }
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const InvalidDoiError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return FixtureClient(std::move(entries));
}

FixtureClient FixtureClient::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

ResolveResult FixtureClient::lookup(const Doi& doi) {
  auto it = entries_.find(validate_doi(lookup_key(doi)));
  if (it == entries_.end()) {
    return ResolveError{ResolveErrorKind::kNotFound, "DOI " + doi.str() + " not found"};
  }
  std::string text = strip_markup(it->second.abstract_text);
  if (text.empty()) {
    return ResolveError{ResolveErrorKind::kNoAbstract,
                        "DOI " + doi.str() + " has no abstract"};
  }
  std::optional<std::string> title;
  if (!it->second.title.empty()) title = it->second.title;
  return ResolvedAbstract{doi, std::move(text), std::move(title), name()};
}

std::string strip_markup(std::string_view markup) {
  std::string text;
  text.reserve(markup.size());
  std::size_t i = 0;
  while (i < markup.size()) {
    char c = markup[i];
    if (c == '<') {
      std::size_t close = markup.find('>', i);
      if (close == std::string_view::npos) break;
      std::string_view tag = markup.substr(i + 1, close - i - 1);
      // Section headings such as <jats:title>Abstract</jats:title> are dropped.
      if (tag == "jats:title" || tag == "title") {
        std::string end = "</" + std::string(tag) + ">";
        std::size_t stop = markup.find(end, close);
        if (stop != std::string_view::npos) {
          i = stop + end.size();
          text.push_back(' ');
          continue;
        }
      }
      text.push_back(' ');
      i = close + 1;
      continue;
    }
    if (c == '&') {
      std::size_t semi = markup.find(';', i);
      if (semi != std::string_view::npos && semi - i <= 10) {
        std::string_view entity = markup.substr(i + 1, semi - i - 1);
        std::string decoded;
        if (entity == "amp") decoded = "&";
        else if (entity == "lt") decoded = "<";
        else if (entity == "gt") decoded = ">";
        else if (entity == "quot") decoded = "\"";
        else if (entity == "apos") decoded = "'";
        else if (entity == "nbsp") decoded = " ";
        else if (entity.size() > 1 && entity[0] == '#') {
          unsigned long cp = 0;
          try {
            cp = (entity[1] == 'x' || entity[1] == 'X')
                     ? std::stoul(std::string(entity.substr(2)), nullptr, 16)
                     : std::stoul(std::string(entity.substr(1)), nullptr, 10);
          } catch (const std::exception&) {
            cp = 0;
          }
          if (cp > 0 && cp < 0x110000 && !(cp >= 0xD800 && cp < 0xE000)) {
            if (cp < 0x80) {
              decoded.push_back(static_cast<char>(cp));
            } else if (cp < 0x800) {
              decoded.push_back(static_cast<char>(0xC0 | (cp >> 6)));
              decoded.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else if (cp < 0x10000) {
              decoded.push_back(static_cast<char>(0xE0 | (cp >> 12)));
              decoded.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
              decoded.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            } else {
              decoded.push_back(static_cast<char>(0xF0 | (cp >> 18)));
              decoded.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
              decoded.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
              decoded.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
            }
          }
        }
        if (!decoded.empty()) {
          text += decoded;
          i = semi + 1;
          continue;
        }
      }
    }
    text.push_back(c);
    ++i;
  }

  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (is_space(c)) {
      if (!out.empty() && out.back() != ' ') out.push_back(' ');
    } else {
      out.push_back(c);
    }
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

ResolveResult resolve_doi(const Doi& doi, MetadataClient& client) {
  try {
    return client.lookup(doi);
  } catch (const std::exception& e) {
    return ResolveError{ResolveErrorKind::kTransport, e.what()};
  }
}

std::vector<ResolveResult> resolve_bulk(const std::vector<Doi>& dois,
                                        MetadataClient& client,
                                        std::size_t max_in_flight) {
  if (max_in_flight == 0) throw std::invalid_argument("max_in_flight must be >= 1");
  std::vector<std::optional<ResolveResult>> slots(dois.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < dois.size(); i = next++) {
      slots[i] = resolve_doi(dois[i], client);
    }
  };
  std::size_t workers = std::min(max_in_flight, dois.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  std::vector<ResolveResult> results;
  results.reserve(slots.size());
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace sdgtag
