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

#include "sdgtag/service.hpp"

#include <algorithm>
#include <atomic>

#include "httplib.h"
#include "sdgtag/digest.hpp"
#include "sdgtag/error.hpp"
#include "sdgtag/textprep.hpp"

namespace sdgtag {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

HttpResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, ordered_json{{"error", {{"code", code}, {"message", message}}}}};
}

HttpResponse not_ready() {
  return error_response(503, "not_ready", "artifacts are not loaded yet");
}

// Parses a JSON object body; nullopt means the caller should answer 400.
std::optional<json> parse_object(std::string_view body, std::string& why) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    why = "request body is not valid JSON";
    return std::nullopt;
  }
  if (!doc.is_object()) {
    why = "request body must be a JSON object";
    return std::nullopt;
  }
  return doc;
}

}  // namespace

Service::Service(ServiceConfig config, std::unique_ptr<MetadataClient> client)
    : config_(std::move(config)),
      client_(std::move(client)),
      feedback_(std::make_unique<FeedbackStore>(config_.feedback_store)) {
  if (!client_) throw ConfigError("service needs a metadata client");
  if (config_.max_text_length == 0) throw ConfigError("max_text_length must be positive");
  if (config_.doi_batch_cap == 0) throw ConfigError("doi_batch_cap must be positive");
}

void Service::load() { install(Engine::load(config_.engine)); }

void Service::install(std::shared_ptr<const Engine> engine) {
  std::lock_guard lock(engine_mutex_);
  engine_ = std::move(engine);
}

bool Service::ready() const { return engine() != nullptr; }

std::shared_ptr<const Engine> Service::engine() const {
  std::lock_guard lock(engine_mutex_);
  return engine_;
}

HttpResponse Service::handle_tag(std::string_view body) const {
  auto eng = engine();
  if (!eng) return not_ready();
  std::string why;
  auto doc = parse_object(body, why);
  if (!doc) return error_response(400, "bad_request", why);
  auto it = doc->find("text");
  if (it == doc->end() || !it->is_string()) {
    return error_response(400, "bad_request", "field 'text' must be a string");
  }
  const auto& text = it->get_ref<const std::string&>();
  if (text.empty()) return error_response(400, "empty_text", "text is empty");
  if (code_point_length(text) > config_.max_text_length) {
    return error_response(400, "text_too_long",
                          "text exceeds " + std::to_string(config_.max_text_length) +
                              " characters");
  }
  return {200, eng->classify(text).to_json()};
}

HttpResponse Service::handle_tag_doi(std::string_view body) const {
  auto eng = engine();
  if (!eng) return not_ready();
  std::string why;
  auto doc = parse_object(body, why);
  if (!doc) return error_response(400, "bad_request", why);
  auto it = doc->find("dois");
  if (it == doc->end() || !it->is_array()) {
    return error_response(400, "bad_request", "field 'dois' must be an array of strings");
  }
  if (it->empty()) return error_response(400, "empty_batch", "'dois' is empty");
  if (it->size() > config_.doi_batch_cap) {
    return error_response(400, "batch_too_large",
                          "at most " + std::to_string(config_.doi_batch_cap) +
                              " DOIs per request");
  }
  std::vector<std::string> raw;
  raw.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_string()) {
      return error_response(400, "bad_request", "field 'dois' must be an array of strings");
    }
    raw.push_back(v.get<std::string>());
  }
  return {200, eng->tag_dois(raw, *client_, config_.doi.max_in_flight)};
}

HttpResponse Service::handle_feedback(std::string_view body) {
  auto eng = engine();
  if (!eng) return not_ready();
  std::string why;
  auto doc = parse_object(body, why);
  if (!doc) return error_response(400, "bad_request", why);

  FeedbackRecord record;
  auto digest = doc->find("input_digest");
  if (digest == doc->end() || !digest->is_string() || digest->get<std::string>().empty()) {
    return error_response(400, "bad_request", "field 'input_digest' must be a nonempty string");
  }
  record.input_digest = digest->get<std::string>();

  auto sdgs = doc->find("suggested_sdgs");
  if (sdgs == doc->end() || !sdgs->is_array()) {
    return error_response(400, "bad_request", "field 'suggested_sdgs' must be an array");
  }
  if (sdgs->empty()) return error_response(400, "invalid_sdgs", "'suggested_sdgs' is empty");
  for (const auto& v : *sdgs) {
    if (!v.is_number_integer() || !SdgId::valid(v.get<long long>())) {
      return error_response(400, "invalid_sdgs", "invalid SDG id " + v.dump());
    }
    record.suggested_sdgs.emplace_back(v.get<int>());
  }
  std::sort(record.suggested_sdgs.begin(), record.suggested_sdgs.end());
  record.suggested_sdgs.erase(
      std::unique(record.suggested_sdgs.begin(), record.suggested_sdgs.end()),
      record.suggested_sdgs.end());

  if (auto ft = doc->find("free_text"); ft != doc->end() && !ft->is_null()) {
    if (!ft->is_string()) return error_response(400, "bad_request", "'free_text' must be a string");
    record.free_text = ft->get<std::string>();
  }
  record.submitted_at = utc_timestamp_now();
  record.engine_version = engine_version();

  try {
    std::size_t id = feedback_->append(record);
    return {201, ordered_json{{"id", id}}};
  } catch (const Error& e) {
    return error_response(500, "store_failure", e.what());
  }
}

HttpResponse Service::handle_stats() const {
  auto eng = engine();
  if (!eng) return not_ready();
  return {200, eng->stats()};
}

HttpResponse Service::handle_health() const {
  auto eng = engine();
  ordered_json body{{"status", eng ? "ready" : "loading"}, {"engine_version", engine_version()}};
  if (eng) body["artifacts"] = eng->artifact_digests();
  return {eng ? 200 : 503, std::move(body)};
}

std::unique_ptr<MetadataClient> make_metadata_client(const ServiceConfig& config) {
  if (config.doi_fixture) {
    return std::make_unique<FixtureClient>(FixtureClient::load(*config.doi_fixture));
  }
  return std::make_unique<HttpMetadataClient>(config.doi);
}

struct HttpServer::Impl {
  Service& service;
  httplib::Server server;
  std::atomic<bool> bound{false};

  explicit Impl(Service& s) : service(s) {}
};

namespace {

void reply(httplib::Response& res, const HttpResponse& out) {
  res.status = out.status;
  res.set_content(out.body.dump(), "application/json; charset=utf-8");
}

}  // namespace

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  Service& svc = impl_->service;

  srv.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                           {"Access-Control-Allow-Headers", "Content-Type"},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  srv.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  srv.Post("/tag", [&svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.handle_tag(req.body));
  });
  srv.Post("/tag-doi", [&svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.handle_tag_doi(req.body));
  });
  srv.Post("/feedback", [&svc](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.handle_feedback(req.body));
  });
  srv.Get("/stats", [&svc](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.handle_stats());
  });
  srv.Get("/health", [&svc](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.handle_health());
  });

  srv.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                               std::exception_ptr ep) {
    std::string what = "internal error";
    try {
      if (ep) std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, error_response(500, "internal", what));
  });

  if (const auto& dir = svc.config().static_dir) {
    if (!srv.set_mount_point("/", dir->string())) {
      throw ConfigError("static directory not found: '" + dir->string() + "'");
    }
  }
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw Error("cannot bind " + host + ":" + std::to_string(port));
  }
  impl_->bound = true;
  return bound;
}

void HttpServer::run() {
  if (!impl_->bound) throw Error("HttpServer::run called before bind");
  impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool HttpServer::running() const { return impl_->server.is_running(); }

}  // namespace sdgtag
