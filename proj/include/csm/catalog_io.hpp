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

#ifndef CSM_CATALOG_IO_HPP_
#define CSM_CATALOG_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "csm/catalog.hpp"

namespace csm {

// Parse and validate a catalog document. Throws ParseError on malformed JSON
// and ValidationError listing every schema violation.
Catalog LoadCatalog(std::string_view document);
std::string SaveCatalog(const Catalog& catalog);

ServiceRequest LoadRequest(std::string_view document, const Catalog& catalog);

nlohmann::json CatalogToJson(const Catalog& catalog);
nlohmann::json PropertyToJson(const PropertySchema& property);
// Unscaled display values; enumeration codes become labels.
nlohmann::json SpecToJson(const PropertySchema& property, const SpecValue& spec);
nlohmann::json RequestToJson(const ServiceRequest& request, const Catalog& catalog);

}  // namespace csm

#endif  // CSM_CATALOG_IO_HPP_
