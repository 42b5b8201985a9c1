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

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "httplib.h"
#include "sdgtag/error.hpp"

namespace sdgtag {
namespace {

TEST(ValidateDoi, AcceptsCanonicalAndPrefixedForms) {
  EXPECT_EQ(validate_doi("10.1787/4bdaeb8c-en").str(), "10.1787/4bdaeb8c-en");
  EXPECT_EQ(validate_doi("  https://doi.org/10.5281/zenodo.3567769 ").str(),
            "10.5281/zenodo.3567769");
  EXPECT_EQ(validate_doi("http://dx.doi.org/10.1000/xyz").str(), "10.1000/xyz");
  EXPECT_EQ(validate_doi("DOI:10.1000/ABC").str(), "10.1000/ABC");
  EXPECT_EQ(validate_doi("doi.org/10.12345/a/b").str(), "10.12345/a/b");
}

TEST(ValidateDoi, RejectsMalformed) {
  for (const char* bad : {"", "garbage", "10.1787", "11.1787/x", "10.17/x", "10.abcd/x",
                          "10.1787/", "10.1787/has space", "https://example.org/10.1000/x"}) {
    EXPECT_THROW(validate_doi(bad), InvalidDoiError) << bad;
  }
}

TEST(StripMarkup, JatsAndEntities) {
  EXPECT_EQ(strip_markup("<jats:title>Abstract</jats:title><jats:p>Sea &amp; ice\n  melt&#233;</jats:p>"),
            "Sea & ice melté");
  EXPECT_EQ(strip_markup("plain   text"), "plain text");
  EXPECT_EQ(strip_markup("<p> </p>"), "");
}

FixtureClient sample_fixture() {
  return FixtureClient::parse(
      "{\"doi\": \"10.1000/A\", \"title\": \"T\", \"abstract\": \"abstract text\"}\n"
      "{\"doi\": \"10.1000/empty\", \"title\": \"E\", \"abstract\": \"<p></p>\"}\n");
}

TEST(FixtureClient, LookupOutcomes) {
  auto client = sample_fixture();
  auto ok = resolve_doi(validate_doi("10.1000/a"), client);
  ASSERT_TRUE(std::holds_alternative<ResolvedAbstract>(ok));
  EXPECT_EQ(std::get<ResolvedAbstract>(ok).abstract_text, "abstract text");
  EXPECT_EQ(std::get<ResolvedAbstract>(ok).title, "T");

  auto missing = resolve_doi(validate_doi("10.1000/unknown"), client);
  ASSERT_TRUE(std::holds_alternative<ResolveError>(missing));
  EXPECT_EQ(std::get<ResolveError>(missing).kind, ResolveErrorKind::kNotFound);

  auto empty = resolve_doi(validate_doi("10.1000/empty"), client);
  EXPECT_EQ(std::get<ResolveError>(empty).kind, ResolveErrorKind::kNoAbstract);

  EXPECT_THROW(FixtureClient::parse("{\"doi\": \"nope\"}\n"), ParseError);
}

// Records the peak number of concurrent lookups.
class ProbeClient : public MetadataClient {
 public:
  ResolveResult lookup(const Doi& doi) override {
    int now = ++in_flight_;
    int prev = peak_.load();
    while (now > prev && !peak_.compare_exchange_weak(prev, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    --in_flight_;
    if (doi.str().back() == '7') throw std::runtime_error("boom");
    return ResolvedAbstract{doi, "text for " + doi.str(), std::nullopt, name()};
  }
  std::string name() const override { return "probe"; }
  int peak() const { return peak_.load(); }

 private:
  std::atomic<int> in_flight_{0};
  std::atomic<int> peak_{0};
};

TEST(ResolveBulk, BoundedAndPositionAligned) {
  std::vector<Doi> dois;
  for (int i = 0; i < 100; ++i) dois.push_back(validate_doi("10.1000/item" + std::to_string(i)));
  ProbeClient probe;
  auto results = resolve_bulk(dois, probe, 8);
  ASSERT_EQ(results.size(), 100u);
  EXPECT_LE(probe.peak(), 8);
  EXPECT_GE(probe.peak(), 1);
  for (std::size_t i = 0; i < dois.size(); ++i) {
    if (dois[i].str().back() == '7') {
      // A throwing client becomes a per-item transport error.
      EXPECT_EQ(std::get<ResolveError>(results[i]).kind, ResolveErrorKind::kTransport);
    } else {
      EXPECT_EQ(std::get<ResolvedAbstract>(results[i]).doi, dois[i]);
    }
  }
  EXPECT_THROW(resolve_bulk(dois, probe, 0), std::invalid_argument);
  EXPECT_TRUE(resolve_bulk({}, probe, 4).empty());
}

TEST(ResolveBulk, EqualsSingleResolution) {
  auto client = sample_fixture();
  std::vector<Doi> dois{validate_doi("10.1000/a"), validate_doi("10.1000/zzz"),
                        validate_doi("10.1000/empty"), validate_doi("10.1000/A")};
  auto bulk = resolve_bulk(dois, client, 3);
  for (std::size_t i = 0; i < dois.size(); ++i) {
    auto single = resolve_doi(dois[i], client);
    ASSERT_EQ(bulk[i].index(), single.index());
    if (auto* e = std::get_if<ResolveError>(&single)) {
      EXPECT_EQ(std::get<ResolveError>(bulk[i]).kind, e->kind);
    } else {
      EXPECT_EQ(std::get<ResolvedAbstract>(bulk[i]).abstract_text,
                std::get<ResolvedAbstract>(single).abstract_text);
    }
  }
}

// A local stand-in for a scholarly metadata REST API.
class MockApi {
 public:
  MockApi() {
    server_.Get(R"(/api/works/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
      last_user_agent_ = req.get_header_value("User-Agent");
      std::string doi = req.matches[1];
      if (doi == "10.1000/ok") {
        res.set_content(R"({"message": {"title": ["A <i>title</i>"],
                           "abstract": "<jats:title>Abstract</jats:title><jats:p>Warming &amp; floods.</jats:p>"}})",
                        "application/json");
      } else if (doi == "10.1000/bare") {
        res.set_content(R"({"message": {"title": ["No abstract"]}})", "application/json");
      } else if (doi == "10.1000/slow") {
        std::this_thread::sleep_for(std::chrono::milliseconds(600));
        res.set_content(R"({"message": {"abstract": "late"}})", "application/json");
      } else if (doi == "10.1000/broken") {
        res.status = 500;
      } else {
        res.status = 404;
      }
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~MockApi() {
    server_.stop();
    thread_.join();
  }
  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/api"; }
  std::string last_user_agent() const { return last_user_agent_; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::string last_user_agent_;
};

TEST(HttpClient, ParsesRecordsAndMapsStatuses) {
  MockApi api;
  HttpClientConfig cfg;
  cfg.base_url = api.base_url();
  cfg.timeout = std::chrono::milliseconds(2000);
  HttpMetadataClient client(cfg);

  auto ok = client.lookup(validate_doi("10.1000/ok"));
  ASSERT_TRUE(std::holds_alternative<ResolvedAbstract>(ok));
  EXPECT_EQ(std::get<ResolvedAbstract>(ok).abstract_text, "Warming & floods.");
  EXPECT_EQ(std::get<ResolvedAbstract>(ok).title, "A title");
  EXPECT_NE(api.last_user_agent().find("mailto:"), std::string::npos);

  EXPECT_EQ(std::get<ResolveError>(client.lookup(validate_doi("10.1000/missing"))).kind,
            ResolveErrorKind::kNotFound);
  EXPECT_EQ(std::get<ResolveError>(client.lookup(validate_doi("10.1000/bare"))).kind,
            ResolveErrorKind::kNoAbstract);
  EXPECT_EQ(std::get<ResolveError>(client.lookup(validate_doi("10.1000/broken"))).kind,
            ResolveErrorKind::kTransport);
}

TEST(HttpClient, TimeoutIsTransportError) {
  MockApi api;
  HttpClientConfig cfg;
  cfg.base_url = api.base_url();
  cfg.timeout = std::chrono::milliseconds(150);
  HttpMetadataClient client(cfg);
  auto r = client.lookup(validate_doi("10.1000/slow"));
  ASSERT_TRUE(std::holds_alternative<ResolveError>(r));
  EXPECT_EQ(std::get<ResolveError>(r).kind, ResolveErrorKind::kTransport);
}

TEST(HttpClient, ConfigValidationAndEnvironment) {
  HttpClientConfig cfg;
  cfg.base_url = "ftp://example.org";
  EXPECT_THROW(HttpMetadataClient{cfg}, ConfigError);
  cfg.base_url = "example.org";
  EXPECT_THROW(HttpMetadataClient{cfg}, ConfigError);

  ::setenv("SDGTAG_DOI_BASE_URL", "http://localhost:9/x", 1);
  EXPECT_EQ(apply_environment({}).base_url, "http://localhost:9/x");
  ::unsetenv("SDGTAG_DOI_BASE_URL");
  EXPECT_EQ(apply_environment({}).base_url, HttpClientConfig{}.base_url);
}

}  // namespace
}  // namespace sdgtag
