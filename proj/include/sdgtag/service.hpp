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

#ifndef SDGTAG_SERVICE_HPP_
#define SDGTAG_SERVICE_HPP_

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sdgtag/doiresolve.hpp"
#include "sdgtag/engine.hpp"
#include "sdgtag/feedback.hpp"

namespace sdgtag {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  EngineConfig engine;
  std::filesystem::path feedback_store = "feedback.jsonl";
  // When set, DOIs resolve from this JSON Lines fixture instead of HTTP.
  std::optional<std::filesystem::path> doi_fixture;
  HttpClientConfig doi;
  std::size_t max_text_length = 20000;  // code points
  std::size_t doi_batch_cap = 100;
  std::optional<std::filesystem::path> static_dir;
};

struct HttpResponse {
  int status = 200;
  nlohmann::ordered_json body;
};

// Transport-independent request handlers. Every handler answers 503 until
// an engine is installed; after that the engine is shared read-only and
// the feedback store is the only mutable state.
class Service {
 public:
  Service(ServiceConfig config, std::unique_ptr<MetadataClient> client);

  // Loads the engine from config().engine and installs it. Throws on any
  // artifact error, leaving the service not ready.
  void load();
  void install(std::shared_ptr<const Engine> engine);
  bool ready() const;

  HttpResponse handle_tag(std::string_view body) const;
  HttpResponse handle_tag_doi(std::string_view body) const;
  HttpResponse handle_feedback(std::string_view body);
  HttpResponse handle_stats() const;
  HttpResponse handle_health() const;

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  std::shared_ptr<const Engine> engine() const;

  ServiceConfig config_;
  std::unique_ptr<MetadataClient> client_;
  mutable std::mutex engine_mutex_;
  std::shared_ptr<const Engine> engine_;
  std::unique_ptr<FeedbackStore> feedback_;
};

// Builds the metadata client the config asks for: the fixture client when
// doi_fixture is set, otherwise HTTP.
std::unique_ptr<MetadataClient> make_metadata_client(const ServiceConfig& config);

// httplib-backed HTTP/1.1 front end for a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds without serving. Port 0 picks a free port. Returns the bound port
  // or throws Error.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind().
  void run();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace sdgtag

#endif  // SDGTAG_SERVICE_HPP_
