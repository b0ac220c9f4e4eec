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

#ifndef CSM_TOOLS_GATEWAY_HANDLES_HPP_
#define CSM_TOOLS_GATEWAY_HANDLES_HPP_

#include <memory>
#include <string>

#include "csm/csm.h"

namespace csm::gateway {

struct CatalogDeleter {
  void operator()(csm_catalog* c) const { csm_catalog_free(c); }
};
struct RequestDeleter {
  void operator()(csm_request* r) const { csm_request_free(r); }
};
struct RankingDeleter {
  void operator()(csm_ranking* r) const { csm_ranking_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { csm_string_free(s); }
};

using CatalogHandle = std::unique_ptr<csm_catalog, CatalogDeleter>;
using RequestHandle = std::unique_ptr<csm_request, RequestDeleter>;
using RankingHandle = std::unique_ptr<csm_ranking, RankingDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

inline std::string Take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

}  // namespace csm::gateway

#endif  // CSM_TOOLS_GATEWAY_HANDLES_HPP_
