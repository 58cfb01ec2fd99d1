// Copyright 2026 The polex Authors.
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

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "polex/errors.h"
#include "polex/llm.h"

namespace polex::llm {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;
};

Endpoint split_endpoint(const std::string& url) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) throw TransportError("endpoint is not an absolute URL: " + url);
  const std::string scheme = url.substr(0, scheme_end);
  if (scheme != "http" && scheme != "https") throw TransportError("unsupported scheme in " + url);
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
  if (scheme == "https") throw TransportError("built without TLS support: " + url);
#endif
  const auto path_start = url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {url, "/"};
  return {url.substr(0, path_start), url.substr(path_start)};
}

}  // namespace

HttpTransport::HttpTransport(std::chrono::seconds timeout) : timeout_(timeout) {}

LlmResponse HttpTransport::send(const LlmRequest& request) {
  const Endpoint ep = split_endpoint(request.endpoint);

  json body;
  body["model"] = request.model;
  body["messages"] = json::array({{{"role", "user"}, {"content", request.prompt + "\n\n" + request.document_text}}});
  if (request.temperature) body["temperature"] = *request.temperature;

  httplib::Headers headers;
  if (const char* key = std::getenv(std::string(kApiKeyEnv).c_str()); key != nullptr && *key != '\0') {
    headers.emplace("Authorization", std::string("Bearer ") + key);
  }

  httplib::Client client(ep.origin);
  client.set_connection_timeout(timeout_);
  client.set_read_timeout(timeout_);
  client.set_write_timeout(timeout_);
  const auto result = client.Post(ep.path, headers, body.dump(), "application/json");
  if (!result) throw TransportError("request to " + request.endpoint + " failed: " + httplib::to_string(result.error()));
  if (result->status == 401 || result->status == 403) {
    throw TransportError("authentication rejected by " + request.endpoint + " (set " + std::string(kApiKeyEnv) + ")");
  }
  if (result->status < 200 || result->status >= 300) {
    throw TransportError("HTTP " + std::to_string(result->status) + " from " + request.endpoint);
  }

  json reply;
  try {
    reply = json::parse(result->body);
  } catch (const json::parse_error& e) {
    throw TransportError(std::string("response is not JSON: ") + e.what());
  }
  const json* content = nullptr;
  if (reply.contains("choices") && reply["choices"].is_array() && !reply["choices"].empty()) {
    const json& first = reply["choices"][0];
    if (first.contains("message") && first["message"].contains("content")) content = &first["message"]["content"];
  }
  if (content == nullptr || !content->is_string()) throw TransportError("response has no choices[0].message.content");
  return {content->get<std::string>(), result->body};
}

}  // namespace polex::llm
