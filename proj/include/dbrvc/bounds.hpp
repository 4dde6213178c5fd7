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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc {

enum class LowerBoundMethod { matching_half, spectral, min_degree, coloring };
enum class UpperBoundMethod { greedy_clique, decomposition_incumbent };

std::string_view bound_name(LowerBoundMethod m);
std::string_view bound_name(UpperBoundMethod m);

/// Extra lower bound supplied by the caller, e.g. an SDP-based theta bound.
/// Must return a value no larger than the MVC size of its argument.
struct LowerBoundExtension {
    std::string label;
    std::function<std::size_t(const Graph&)> compute;
};

/// Which bounds the engine evaluates per subproblem. The trivial bounds 0 and
/// n are always in effect.
struct BoundConfig {
    std::vector<LowerBoundMethod> lower;
    std::vector<UpperBoundMethod> upper;
    std::vector<LowerBoundExtension> lower_extensions;

    bool empty() const noexcept { return lower.empty() && upper.empty() && lower_extensions.empty(); }
    bool has(LowerBoundMethod m) const;
    bool has(UpperBoundMethod m) const;

    /// Coloring lower bound with the decomposition upper bound.
    static BoundConfig dbr_default();
    static BoundConfig none() { return {}; }
};

/// Parses the command line vocabulary: lower one of
/// matching|spectral|min-degree|coloring|deterministic|all|none (comma
/// separated lists allowed), upper one of clique|decomposition|all|none.
std::vector<LowerBoundMethod> parse_lower_bounds(std::string_view spec);
std::vector<UpperBoundMethod> parse_upper_bounds(std::string_view spec);

struct BoundPart {
    std::string label;
    std::size_t value = 0;
};

struct BoundsReport {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<BoundPart> lower_parts;
    std::vector<BoundPart> upper_parts;
    /// A vertex cover of size `upper`, when the upper bound came from a
    /// constructive method.
    std::optional<std::vector<Vertex>> witness_cover;
    /// Set when a method failed and fell back to its trivial value.
    bool degraded = false;
};

/// Size of a greedy maximal matching taken in lexicographic edge order. Every
/// cover needs a distinct endpoint of each matched edge.
std::size_t lb_matching_half(const Graph& g);

/// Minimum degree (0 for edgeless or empty graphs).
std::size_t lb_min_degree(const Graph& g);

struct SpectralBound {
    std::size_t value = 0;
    bool degraded = false;
};

/// n - (n0 + min(n+, n-)) from the inertia of the adjacency matrix, clamped at
/// zero. Eigenvalues within 1e-8 times the spectral radius count as zero.
SpectralBound lb_spectral(const Graph& g);

/// n - k where k is the number of colors of a largest-first greedy coloring of
/// the complement.
std::size_t lb_coloring(const Graph& g);

struct CliqueBound {
    std::size_t value = 0;
    std::vector<Vertex> witness;  ///< sorted, always a vertex cover of g
};

/// Greedy maximal clique of the complement (an independent set of g), built in
/// descending complement-degree order; the cover is everything else.
CliqueBound ub_greedy_clique(const Graph& g);

/// Combines the enabled bounds: lower is the maximum of the enabled lower
/// bounds, upper the minimum of the enabled upper bounds and `incumbent`
/// (the decomposition bound, passed in by the caller).
BoundsReport combine_bounds(const Graph& g, const BoundConfig& cfg, std::optional<std::size_t> incumbent);

}  // namespace dbrvc
