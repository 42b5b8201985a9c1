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

#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "sdgtag/doiresolve.hpp"
#include "sdgtag/error.hpp"

namespace sdgtag {

namespace {

std::string percent_encode_path(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' || c == '/') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0x0f]);
    }
  }
  return out;
}

}  // namespace

HttpClientConfig apply_environment(HttpClientConfig config) {
  if (const char* url = std::getenv("SDGTAG_DOI_BASE_URL"); url && *url) {
    config.base_url = url;
  }
  return config;
}

HttpMetadataClient::HttpMetadataClient(HttpClientConfig config)
    : config_(std::move(config)) {
  std::string_view url = config_.base_url;
  std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos) {
    throw ConfigError("DOI client base URL must include a scheme: '" + config_.base_url + "'");
  }
  std::string_view scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") {
    throw ConfigError("DOI client base URL must be http or https: '" + config_.base_url + "'");
  }
  std::size_t path_start = url.find('/', scheme_end + 3);
  scheme_host_port_ = std::string(url.substr(0, path_start));
  if (path_start != std::string_view::npos) {
    path_prefix_ = std::string(url.substr(path_start));
    while (!path_prefix_.empty() && path_prefix_.back() == '/') path_prefix_.pop_back();
  }
  if (config_.max_in_flight == 0) {
    throw ConfigError("DOI client max_in_flight must be >= 1");
  }
}

HttpMetadataClient::~HttpMetadataClient() = default;

std::string HttpMetadataClient::name() const { return "http:" + scheme_host_port_; }

void HttpMetadataClient::pace() {
  if (config_.min_interval.count() <= 0) return;
  std::lock_guard lock(pace_mutex_);
  auto now = std::chrono::steady_clock::now();
  if (now < next_start_) {
    std::this_thread::sleep_until(next_start_);
    now = next_start_;
  }
  next_start_ = now + config_.min_interval;
}

ResolveResult HttpMetadataClient::lookup(const Doi& doi) {
  pace();
  httplib::Client client(scheme_host_port_);
  auto seconds = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  auto micros = std::chrono::duration_cast<std::chrono::microseconds>(config_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());
  client.set_follow_location(true);

  httplib::Headers headers{{"User-Agent", config_.user_agent},
                           {"Accept", "application/json"}};
  std::string path = path_prefix_ + "/works/" + percent_encode_path(doi.str());
  auto res = client.Get(path, headers);
  if (!res) {
    return ResolveError{ResolveErrorKind::kTransport,
                        "request for " + doi.str() + " failed: " + httplib::to_string(res.error())};
  }
  if (res->status == 404) {
    return ResolveError{ResolveErrorKind::kNotFound, "DOI " + doi.str() + " not found"};
  }
  if (res->status != 200) {
    return ResolveError{ResolveErrorKind::kTransport,
                        "HTTP " + std::to_string(res->status) + " for " + doi.str()};
  }

  nlohmann::json body;
  try {
    body = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::parse_error& e) {
    return ResolveError{ResolveErrorKind::kTransport,
                        "unparseable metadata for " + doi.str() + ": " + e.what()};
  }
  const nlohmann::json& message = body.contains("message") ? body["message"] : body;
  if (!message.is_object()) {
    return ResolveError{ResolveErrorKind::kTransport, "unexpected metadata shape for " + doi.str()};
  }
  std::string text;
  if (message.contains("abstract") && message["abstract"].is_string()) {
    text = strip_markup(message["abstract"].get_ref<const std::string&>());
  }
  if (text.empty()) {
    return ResolveError{ResolveErrorKind::kNoAbstract, "DOI " + doi.str() + " has no abstract"};
  }
  std::optional<std::string> title;
  if (message.contains("title")) {
    const auto& t = message["title"];
    if (t.is_array() && !t.empty() && t[0].is_string()) {
      title = strip_markup(t[0].get<std::string>());
    } else if (t.is_string()) {
      title = strip_markup(t.get<std::string>());
    }
  }
  return ResolvedAbstract{doi, std::move(text), std::move(title), name()};
}

}  // namespace sdgtag
