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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dbrvc/qubo.hpp"

namespace dbrvc::detail {

// Symmetric adjacency of the coupler graph.
struct CsrCouplers {
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> targets;
    std::vector<double> weights;
};

inline CsrCouplers couplers(const Qubo& q) {
    CsrCouplers c;
    std::vector<std::size_t> count(q.n + 1, 0);
    for (const auto& [key, w] : q.quadratic) {
        ++count[key.first];
        ++count[key.second];
    }
    c.offsets.assign(q.n + 1, 0);
    for (std::size_t i = 0; i < q.n; ++i) c.offsets[i + 1] = c.offsets[i] + count[i];
    c.targets.resize(c.offsets.back());
    c.weights.resize(c.offsets.back());
    std::vector<std::size_t> fill(c.offsets.begin(), c.offsets.end() - 1);
    for (const auto& [key, w] : q.quadratic) {
        c.targets[fill[key.first]] = key.second;
        c.weights[fill[key.first]++] = w;
        c.targets[fill[key.second]] = key.first;
        c.weights[fill[key.second]++] = w;
    }
    return c;
}

}  // namespace dbrvc::detail
