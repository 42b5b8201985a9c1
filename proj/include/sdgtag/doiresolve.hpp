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

#ifndef SDGTAG_DOIRESOLVE_HPP_
#define SDGTAG_DOIRESOLVE_HPP_

#include <chrono>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sdgtag {

// A validated DOI, "10.<registrant>/<suffix>" with a lowercase registrant
// of at least four digits and a nonempty, whitespace-free suffix.
class Doi {
 public:
  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Doi&, const Doi&) = default;
  friend auto operator<=>(const Doi&, const Doi&) = default;

 private:
  explicit Doi(std::string value) : value_(std::move(value)) {}
  friend Doi validate_doi(std::string_view raw);

  std::string value_;
};

// Trims whitespace, strips a resolver prefix (https://doi.org/,
// http://dx.doi.org/ and their http/https, doi.org/dx.doi.org variants, or
// "doi:"), and checks the shape. Throws InvalidDoiError with the reason.
Doi validate_doi(std::string_view raw);

struct ResolvedAbstract {
  Doi doi;
  std::string abstract_text;  // never empty
  std::optional<std::string> title;
  std::string source;  // resolver identifier, e.g. "fixture" or the API host
};

enum class ResolveErrorKind { kNotFound, kNoAbstract, kTransport };

// Wire name: not_found, no_abstract, transport.
std::string_view to_string(ResolveErrorKind kind);

struct ResolveError {
  ResolveErrorKind kind;
  std::string message;
};

using ResolveResult = std::variant<ResolvedAbstract, ResolveError>;

// Source of abstracts for DOIs. Implementations must tolerate concurrent
// lookup() calls.
class MetadataClient {
 public:
  virtual ~MetadataClient() = default;
  virtual ResolveResult lookup(const Doi& doi) = 0;
  virtual std::string name() const = 0;
};

// In-process client backed by a JSON Lines file of
// {"doi": string, "title": string, "abstract": string}.
class FixtureClient : public MetadataClient {
 public:
  struct Entry {
    std::string title;
    std::string abstract_text;
  };

  explicit FixtureClient(std::map<Doi, Entry> entries) : entries_(std::move(entries)) {}
  static FixtureClient parse(std::string_view jsonl);
  static FixtureClient load(const std::filesystem::path& path);

  ResolveResult lookup(const Doi& doi) override;
  std::string name() const override { return "fixture"; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Doi, Entry> entries_;
};

struct HttpClientConfig {
  // Scholarly metadata REST endpoint; records are read from
  // {base_url}/works/{doi} and the abstract from message.abstract.
  std::string base_url = "https://api.crossref.org";
  std::chrono::milliseconds timeout{10000};
  // Sent as User-Agent; public APIs ask for a contact address here.
  std::string user_agent = std::string("sdgtag/") + SDGTAG_VERSION +
                           " (mailto:maintainers@example.org)";
  std::size_t max_in_flight = 4;
  std::chrono::milliseconds min_interval{0};  // between request starts
};

// Reads SDGTAG_DOI_BASE_URL into config.base_url when set.
HttpClientConfig apply_environment(HttpClientConfig config);

// HTTP JSON client. Abstract markup (JATS tags, HTML entities) is stripped
// to plain text. 404 maps to not_found, a record without an abstract to
// no_abstract, anything else unexpected to transport.
class HttpMetadataClient : public MetadataClient {
 public:
  explicit HttpMetadataClient(HttpClientConfig config);
  ~HttpMetadataClient() override;

  ResolveResult lookup(const Doi& doi) override;
  std::string name() const override;
  const HttpClientConfig& config() const noexcept { return config_; }

 private:
  void pace();

  HttpClientConfig config_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  std::mutex pace_mutex_;
  std::chrono::steady_clock::time_point next_start_{};
};

// Tags removed, common entities decoded, whitespace collapsed.
std::string strip_markup(std::string_view markup);

ResolveResult resolve_doi(const Doi& doi, MetadataClient& client);

// Resolves every DOI with at most max_in_flight lookups outstanding. The
// result is position-aligned with the input and a failed item never
// affects the others. Throws std::invalid_argument if max_in_flight is 0.
std::vector<ResolveResult> resolve_bulk(const std::vector<Doi>& dois,
                                        MetadataClient& client,
                                        std::size_t max_in_flight);

}  // namespace sdgtag

#endif  // SDGTAG_DOIRESOLVE_HPP_
