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
#include <string_view>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc {

/// A node of the decomposition tree: the residual graph still to be covered,
/// how its vertices map back to the input graph, and the input-graph vertices
/// already committed to the cover on the way down.
///
/// Invariant: no committed vertex appears in `mapping`.
struct Subproblem {
    Graph graph;
    VertexMapping mapping;
    std::vector<Vertex> committed;  ///< sorted original ids
    std::size_t depth = 0;

    static Subproblem root(const Graph& g);

    std::size_t committed_size() const noexcept { return committed.size(); }

    /// Commits residual vertices `local` (residual ids) and removes them
    /// together with `also_drop` from the residual graph. Depth is kept.
    Subproblem commit_and_drop(std::span<const Vertex> local, std::span<const Vertex> also_drop) const;
};

enum class SelectionKind { lowest_degree, highest_degree, median_degree, random };

SelectionKind parse_selection_kind(std::string_view name);
std::string_view selection_name(SelectionKind kind);

struct SelectionStrategy {
    SelectionKind kind = SelectionKind::highest_degree;
    std::uint64_t seed = 0;
};

/// Picks the split vertex. Ties within the qualifying degree class are broken
/// uniformly at random using `strategy.seed`; the median class is the degree
/// at the lower median of the sorted degree sequence.
Vertex select_vertex(const Subproblem& s, const SelectionStrategy& strategy);

struct SplitResult {
    Subproblem plus;   ///< v in the cover: v removed
    Subproblem minus;  ///< v not in the cover: N(v) committed, N[v] removed
};

SplitResult split(const Subproblem& s, Vertex v);

}  // namespace dbrvc
