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

// Command-line front end: match, validate and serve.
//
// Exit codes: 0 success (match: at least one feasible service), 1 invalid
// input or usage, 2 I/O or startup failure, 3 no feasible service.

#include <csignal>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <pthread.h>

#include "CLI11.hpp"
#include "csm/csm.h"
#include "gateway/handles.hpp"
#include "gateway/log.hpp"
#include "gateway/server.hpp"

namespace {

using csm::gateway::CatalogHandle;
using csm::gateway::RankingHandle;
using csm::gateway::RequestHandle;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitInfeasible = 3;

int ExitCodeFor(csm_status status) {
  switch (status) {
    case CSM_OK:
      return kExitOk;
    case CSM_ERR_IO:
      return kExitIo;
    case CSM_ERR_INTERNAL:
      return kExitIo;
    default:
      return kExitInvalid;
  }
}

// Prints the thread's last error to stderr, one line per issue when there are
// any, and maps the status to an exit code.
int ReportError(csm_status status, const std::string& what) {
  const size_t n = csm_last_error_issue_count();
  if (n == 0) {
    std::cerr << what << ": " << csm_last_error_message() << "\n";
  } else {
    for (size_t i = 0; i < n; ++i) {
      const char* path = nullptr;
      const char* message = nullptr;
      csm_last_error_issue(i, &path, &message);
      std::cerr << what << ": " << path << ": " << message << "\n";
    }
  }
  return ExitCodeFor(status);
}

const char* Glyph(csm_degree degree) {
  switch (degree) {
    case CSM_DEGREE_SUPER:
      return "++";
    case CSM_DEGREE_EXACT:
      return "+";
    case CSM_DEGREE_PARTIAL:
      return "~";
    case CSM_DEGREE_FAIL:
      return "x";
    case CSM_DEGREE_NOSPEC:
      return "?";
  }
  return "?";
}

void PrintTable(const csm_ranking* ranking) {
  const size_t n = csm_ranking_size(ranking);
  std::cout << "rank  id    feasible  points  violation  score  degrees  name\n";
  for (size_t i = 0; i < n; ++i) {
    csm_report_view report{};
    if (csm_ranking_report(ranking, i, &report) != CSM_OK) continue;
    std::ostringstream degrees;
    for (size_t p = 0; p < report.property_count; ++p) {
      csm_property_view prop{};
      if (csm_ranking_property(ranking, i, p, &prop) != CSM_OK) continue;
      if (p > 0) degrees << ' ';
      degrees << prop.property_id << '=' << Glyph(prop.degree);
      if (prop.soft && prop.violation != 0) degrees << "(-" << prop.violation << ')';
    }
    char line[160];
    std::snprintf(line, sizeof line, "%-5zu %-5lld %-9s %-7lld %-10lld %-6lld ", i + 1,
                  static_cast<long long>(report.service_id), report.hard_feasible ? "yes" : "no",
                  static_cast<long long>(report.total_points),
                  static_cast<long long>(report.total_violation),
                  static_cast<long long>(report.final_score));
    std::cout << line << degrees.str() << "  " << report.name << "\n";
  }
  std::cout << "feasible: " << csm_ranking_feasible_count(ranking) << "/" << n << "\n";
  std::cout << "legend: ++ super, + exact, ~ partial, x fail, ? no spec\n";
}

std::optional<CatalogHandle> LoadCatalog(const std::string& path, int* exit_code) {
  csm_catalog* raw = nullptr;
  const csm_status status = csm_catalog_load_file(path.c_str(), &raw);
  if (status != CSM_OK) {
    *exit_code = ReportError(status, "catalog");
    return std::nullopt;
  }
  return CatalogHandle(raw);
}

std::optional<RequestHandle> LoadRequest(const csm_catalog* catalog, const std::string& path,
                                         int* exit_code) {
  csm_request* raw = nullptr;
  const csm_status status = csm_request_load_file(catalog, path.c_str(), &raw);
  if (status != CSM_OK) {
    *exit_code = ReportError(status, "request");
    return std::nullopt;
  }
  return RequestHandle(raw);
}

struct MatchArgs {
  std::string catalog;
  std::string request;
  std::string output = "json";
  bool strict_missing = false;
  bool normalize_diff = false;
};

int RunMatch(const MatchArgs& args) {
  int code = kExitOk;
  auto catalog = LoadCatalog(args.catalog, &code);
  if (!catalog) return code;
  auto request = LoadRequest(catalog->get(), args.request, &code);
  if (!request) return code;

  csm_match_options options{args.strict_missing ? 1 : 0, args.normalize_diff ? 1 : 0};
  csm_ranking* raw = nullptr;
  const csm_status status = csm_match(catalog->get(), request->get(), &options, &raw);
  if (status != CSM_OK) return ReportError(status, "match");
  RankingHandle ranking(raw);

  if (args.output == "table") {
    PrintTable(ranking.get());
  } else {
    char* out = nullptr;
    const csm_status st = csm_ranking_response_json(ranking.get(), &out);
    if (st != CSM_OK) return ReportError(st, "match");
    std::cout << csm::gateway::Take(out) << "\n";
  }
  return csm_ranking_feasible_count(ranking.get()) > 0 ? kExitOk : kExitInfeasible;
}

int RunValidate(const std::string& catalog_path, const std::string& request_path) {
  int code = kExitOk;
  auto catalog = LoadCatalog(catalog_path, &code);
  if (!catalog) return code;
  if (!request_path.empty()) {
    auto request = LoadRequest(catalog->get(), request_path, &code);
    if (!request) return code;
  }
  return kExitOk;
}

struct ServeArgs {
  std::string catalog;
  std::string host = "127.0.0.1";
  int port = 8080;
  bool strict_missing = false;
};

int RunServe(const ServeArgs& args) {
  // Block the stop signals before any thread exists so only the waiter sees them.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);

  int code = kExitOk;
  auto catalog = LoadCatalog(args.catalog, &code);
  if (!catalog) return code == kExitInvalid ? kExitIo : code;

  csm::gateway::Server server(std::move(*catalog),
                              csm::gateway::ServerOptions{args.strict_missing});
  if (!server.bind(args.host, args.port)) {
    std::cerr << "serve: cannot bind " << args.host << ":" << args.port << "\n";
    return kExitIo;
  }
  std::thread waiter([&server, stop_signals] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    csm::gateway::Log(csm::gateway::LogLevel::kInfo, "stopping");
    server.stop();
  });
  waiter.detach();
  std::cerr << "listening on " << args.host << ":" << args.port << "\n";
  server.listen();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  csm::gateway::SetLogLevel(csm::gateway::LogLevelFromEnv());

  CLI::App app{"Cloud service matcher"};
  app.set_version_flag("--version", std::string(csm_version()));
  app.require_subcommand(1);

  MatchArgs match;
  auto* match_cmd = app.add_subcommand("match", "Rank catalog services against a request");
  match_cmd->add_option("--catalog", match.catalog, "Catalog JSON file")->required();
  match_cmd->add_option("--request", match.request, "Request JSON file")->required();
  match_cmd->add_option("--output", match.output, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  match_cmd->add_flag("--strict-missing", match.strict_missing,
                      "A missing spec fails a hard constraint");
  match_cmd->add_flag("--normalize-diff", match.normalize_diff,
                      "Scale difference violations to 0..1000");

  std::string validate_catalog;
  std::string validate_request;
  auto* validate_cmd = app.add_subcommand("validate", "Check catalog and request files");
  validate_cmd->add_option("--catalog", validate_catalog, "Catalog JSON file")->required();
  validate_cmd->add_option("--request", validate_request, "Request JSON file");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "Serve the catalog over HTTP");
  serve_cmd->add_option("--catalog", serve.catalog, "Catalog JSON file")->required();
  serve_cmd->add_option("--port", serve.port, "TCP port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", serve.host, "Bind address");
  serve_cmd->add_flag("--strict-missing", serve.strict_missing,
                      "A missing spec fails a hard constraint");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (*match_cmd) return RunMatch(match);
  if (*validate_cmd) return RunValidate(validate_catalog, validate_request);
  if (*serve_cmd) return RunServe(serve);
  return kExitInvalid;
}
