// Copyright 2026 The csm Authors
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

#include "server.hpp"

#include <chrono>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "log.hpp"

namespace csm::gateway {
namespace {

using nlohmann::json;

constexpr const char* kJson = "application/json";

json LastErrorJson() {
  json issues = json::array();
  for (size_t i = 0; i < csm_last_error_issue_count(); ++i) {
    const char* path = nullptr;
    const char* message = nullptr;
    csm_last_error_issue(i, &path, &message);
    issues.push_back({{"path", path}, {"message", message}});
  }
  return {{"error", csm_last_error_message()}, {"issues", std::move(issues)}};
}

void SendJson(httplib::Response& res, int status, const std::string& body) {
  res.status = status;
  res.set_content(body, kJson);
}

}  // namespace

Server::Server(CatalogHandle catalog, ServerOptions options)
    : catalog_(std::move(catalog)), options_(options), http_(std::make_unique<httplib::Server>()) {
  install_routes();
}

Server::~Server() = default;

void Server::install_routes() {
  http_->Get("/health", [](const httplib::Request&, httplib::Response& res) {
    SendJson(res, 200, R"({"status":"ok"})");
  });

  http_->Get("/api/properties", [this](const httplib::Request&, httplib::Response& res) {
    char* out = nullptr;
    if (csm_catalog_properties_json(catalog_.get(), &out) != CSM_OK) {
      SendJson(res, 500, LastErrorJson().dump());
      return;
    }
    SendJson(res, 200, Take(out));
  });

  http_->Get("/api/services", [this](const httplib::Request&, httplib::Response& res) {
    char* out = nullptr;
    if (csm_catalog_services_json(catalog_.get(), &out) != CSM_OK) {
      SendJson(res, 500, LastErrorJson().dump());
      return;
    }
    SendJson(res, 200, Take(out));
  });

  http_->Get(R"(/api/services/([^/]+))", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
    const std::string raw = req.matches[1];
    std::int64_t id = -1;
    try {
      std::size_t used = 0;
      id = std::stoll(raw, &used);
      if (used != raw.size()) id = -1;
    } catch (const std::exception&) {
      id = -1;
    }
    char* out = nullptr;
    if (id < 0 || csm_catalog_service_json(catalog_.get(), id, &out) != CSM_OK) {
      SendJson(res, 404, json{{"error", "no service with id " + raw}}.dump());
      return;
    }
    SendJson(res, 200, Take(out));
  });

  http_->Post("/api/match", [this](const httplib::Request& req, httplib::Response& res) {
    csm_request* raw_request = nullptr;
    const csm_status loaded =
        csm_request_load(catalog_.get(), req.body.data(), req.body.size(), &raw_request);
    if (loaded == CSM_ERR_PARSE || loaded == CSM_ERR_VALIDATION) {
      Log(LogLevel::kInfo, std::string("rejected match request: ") + csm_last_error_message());
      SendJson(res, 422, LastErrorJson().dump());
      return;
    }
    if (loaded != CSM_OK) {
      SendJson(res, 500, LastErrorJson().dump());
      return;
    }
    RequestHandle request(raw_request);
    csm_match_options options{options_.strict_missing ? 1 : 0, 0};
    csm_ranking* raw_ranking = nullptr;
    if (csm_match(catalog_.get(), request.get(), &options, &raw_ranking) != CSM_OK) {
      Log(LogLevel::kError, std::string("match failed: ") + csm_last_error_message());
      SendJson(res, 500, LastErrorJson().dump());
      return;
    }
    RankingHandle ranking(raw_ranking);
    char* out = nullptr;
    if (csm_ranking_response_json(ranking.get(), &out) != CSM_OK) {
      SendJson(res, 500, LastErrorJson().dump());
      return;
    }
    Log(LogLevel::kDebug, "match served in " + std::to_string(csm_ranking_timing_ms(ranking.get())) +
                              " ms");
    SendJson(res, 200, Take(out));
  });

  http_->set_logger([](const httplib::Request& req, const httplib::Response& res) {
    Log(LogLevel::kInfo, req.method + " " + req.path + " -> " + std::to_string(res.status));
  });
}

bool Server::bind(const std::string& host, int port) { return http_->bind_to_port(host, port); }

int Server::bind_any_port(const std::string& host) { return http_->bind_to_any_port(host); }

bool Server::listen() { return http_->listen_after_bind(); }

void Server::stop() { http_->stop(); }

void Server::wait_until_ready() const {
  while (!http_->is_running()) std::this_thread::sleep_for(std::chrono::milliseconds(1));
}

}  // namespace csm::gateway
