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

#include "dbrvc/decompose.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "dbrvc/errors.hpp"
#include "detail/rng.hpp"

namespace dbrvc {

Subproblem Subproblem::root(const Graph& g) {
    return {g, VertexMapping::identity(g.num_vertices()), {}, 0};
}

Subproblem Subproblem::commit_and_drop(std::span<const Vertex> local, std::span<const Vertex> also_drop) const {
    std::vector<Vertex> added;
    added.reserve(local.size());
    for (Vertex v : local) added.push_back(mapping.forward.at(v));
    std::sort(added.begin(), added.end());

    Subproblem out;
    out.committed.reserve(committed.size() + added.size());
    std::merge(committed.begin(), committed.end(), added.begin(), added.end(), std::back_inserter(out.committed));
    out.committed.erase(std::unique(out.committed.begin(), out.committed.end()), out.committed.end());

    std::vector<Vertex> drop(local.begin(), local.end());
    drop.insert(drop.end(), also_drop.begin(), also_drop.end());
    auto [residual, inner] = remove_vertices(graph, drop);
    out.graph = std::move(residual);
    out.mapping = mapping.compose(inner);
    out.depth = depth;
    return out;
}

SelectionKind parse_selection_kind(std::string_view name) {
    if (name == "min" || name == "lowest" || name == "lowest_degree") return SelectionKind::lowest_degree;
    if (name == "max" || name == "highest" || name == "highest_degree") return SelectionKind::highest_degree;
    if (name == "median" || name == "median_degree") return SelectionKind::median_degree;
    if (name == "random") return SelectionKind::random;
    throw ConfigError("unknown selection strategy '" + std::string(name) + "'");
}

std::string_view selection_name(SelectionKind kind) {
    switch (kind) {
        case SelectionKind::lowest_degree: return "min";
        case SelectionKind::highest_degree: return "max";
        case SelectionKind::median_degree: return "median";
        case SelectionKind::random: return "random";
    }
    return "unknown";
}

Vertex select_vertex(const Subproblem& s, const SelectionStrategy& strategy) {
    const Graph& g = s.graph;
    const std::size_t n = g.num_vertices();
    if (n == 0) throw InvalidArgument("select_vertex: residual graph is empty");

    std::size_t target = 0;
    switch (strategy.kind) {
        case SelectionKind::lowest_degree:
            target = g.degree(0);
            for (Vertex v = 1; v < n; ++v) target = std::min(target, g.degree(v));
            break;
        case SelectionKind::highest_degree:
            target = g.degree(0);
            for (Vertex v = 1; v < n; ++v) target = std::max(target, g.degree(v));
            break;
        case SelectionKind::median_degree: {
            std::vector<std::size_t> degrees(n);
            for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
            auto mid = degrees.begin() + static_cast<std::ptrdiff_t>((n - 1) / 2);
            std::nth_element(degrees.begin(), mid, degrees.end());
            target = *mid;
            break;
        }
        case SelectionKind::random: {
            detail::Rng rng(strategy.seed);
            return static_cast<Vertex>(detail::uniform_index(rng, n));
        }
    }

    std::vector<Vertex> ties;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == target) ties.push_back(v);
    }
    if (ties.size() == 1) return ties.front();
    detail::Rng rng(strategy.seed);
    return ties[detail::uniform_index(rng, ties.size())];
}

SplitResult split(const Subproblem& s, Vertex v) {
    if (!s.graph.has_vertex(v)) {
        throw InvalidArgument("split: vertex " + std::to_string(v) + " is not in the residual graph");
    }
    const Vertex self[] = {v};
    auto nbrs = s.graph.neighbors(v);

    SplitResult out{s.commit_and_drop(self, {}), s.commit_and_drop(nbrs, self)};
    out.plus.depth = s.depth + 1;
    out.minus.depth = s.depth + 1;
    return out;
}

}  // namespace dbrvc
