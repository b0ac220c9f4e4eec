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

#ifndef CSM_TOOLS_GATEWAY_LOG_HPP_
#define CSM_TOOLS_GATEWAY_LOG_HPP_

#include <string_view>

namespace csm::gateway {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Reads CSM_LOG (error|warn|info|debug); defaults to warn.
LogLevel LogLevelFromEnv();
void SetLogLevel(LogLevel level);
void Log(LogLevel level, std::string_view message);

}  // namespace csm::gateway

#endif  // CSM_TOOLS_GATEWAY_LOG_HPP_
