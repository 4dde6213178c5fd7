// Copyright 2026 The dbrvc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dbrvc/engine.hpp"

namespace dbrvc::report {

nlohmann::json solve_json(const SolveResult& r, const Graph* g, const std::vector<std::int64_t>* labels,
                          const SolveConfig& cfg);

nlohmann::json decomposition_json(const Decomposition& d, const Graph& g, const SolveConfig& cfg);

std::string leaf_file_name(std::size_t id);

}  // namespace dbrvc::report
