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

#ifndef CSM_TOOLS_GATEWAY_SERVER_HPP_
#define CSM_TOOLS_GATEWAY_SERVER_HPP_

#include <memory>
#include <string>

#include "handles.hpp"

namespace httplib {
class Server;
}

namespace csm::gateway {

struct ServerOptions {
  bool strict_missing = false;
};

// HTTP front end over one immutable catalog. Each request runs its own
// matcher invocation; handlers share nothing mutable.
//
//   GET  /health               {"status":"ok"}
//   GET  /api/properties       schema array
//   GET  /api/services         service summaries
//   GET  /api/services/{id}    one summary, 404 when unknown
//   POST /api/match            match response, 422 on an invalid request
class Server {
 public:
  Server(CatalogHandle catalog, ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  bool bind(const std::string& host, int port);
  // Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);
  // Blocks until stop().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  void install_routes();

  CatalogHandle catalog_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace csm::gateway

#endif  // CSM_TOOLS_GATEWAY_SERVER_HPP_
