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
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dbrvc/bounds.hpp"
#include "dbrvc/decompose.hpp"
#include "dbrvc/qubo.hpp"
#include "dbrvc/reduce.hpp"

namespace dbrvc {

enum class LeafSolver { exact, qubo_exhaustive, qubo_anneal };

LeafSolver parse_leaf_solver(std::string_view name);
std::string_view leaf_solver_name(LeafSolver s);

/// Largest complete graph embeddable on the respective annealer generation.
inline constexpr std::size_t kLeafSize2X = 46;
inline constexpr std::size_t kLeafSize2000Q = 65;
inline constexpr std::size_t kLeafSizePegasus = 180;

/// "46", "65", "180", any positive integer, or the aliases 2x, 2000q, pegasus.
std::size_t parse_leaf_size(std::string_view text);

struct SolveConfig {
    std::size_t leaf_size = kLeafSize2X;
    SelectionStrategy strategy{};
    BoundConfig bounds = BoundConfig::dbr_default();
    std::vector<std::string> reductions{"neighbor"};
    /// Registry used to resolve `reductions`; the built-ins when null.
    std::shared_ptr<const ReductionRegistry> registry;
    LeafSolver leaf_solver = LeafSolver::exact;
    std::uint64_t seed = 0;
    double qpu_seconds_per_leaf = 1.6;
    double penalty_a = 2.0;
    double size_b = 1.0;
    AnnealParams anneal{};
    std::size_t exhaustive_cap = kDefaultExhaustiveCap;
    /// 1 runs the deterministic depth-first traversal; more threads share the
    /// work stack and an atomic incumbent.
    std::size_t threads = 1;

    /// Throws ConfigError on inconsistent settings.
    void validate() const;
    /// Stable one-line summary of the settings, for reports.
    std::string fingerprint() const;
};

struct DepthStats {
    std::size_t depth = 0;
    std::size_t generated = 0;
    std::size_t pruned = 0;
    std::size_t leaves = 0;
};

struct SolveResult {
    std::vector<Vertex> cover;  ///< sorted ids of the input graph
    std::size_t size = 0;
    std::size_t leaf_count = 0;
    std::size_t subproblems_generated = 0;
    std::size_t subproblems_pruned = 0;
    double preprocessing_seconds = 0.0;
    /// preprocessing_seconds + qpu_seconds_per_leaf * leaf_count
    double solution_seconds = 0.0;
    double leaf_solver_seconds = 0.0;
    std::size_t max_leaf_size = 0;  ///< largest residual handed to a leaf solver
    std::vector<DepthStats> per_depth_stats;
    std::vector<std::string> warnings;
};

/// The decomposition / bounds / reduction solver.
///
/// Depth-first with the G+ child explored first. At each node: apply the
/// configured reductions; hand residuals of at most `leaf_size` vertices to
/// the leaf solver; otherwise bound, prune when committed + lower >= the
/// incumbent, adopt any cheaper witness cover, and split on the selected
/// vertex. The returned cover is checked against `g` before returning.
SolveResult solve(const Graph& g, const SolveConfig& cfg);

struct Decomposition {
    std::vector<Subproblem> leaves;
    std::vector<Vertex> incumbent;  ///< best complete cover found while decomposing
    std::size_t subproblems_generated = 0;
    std::size_t subproblems_pruned = 0;
    double preprocessing_seconds = 0.0;
    std::vector<DepthStats> per_depth_stats;
};

/// The traversal of `solve` without any leaf solving: returns every leaf that
/// survives pruning. min(|incumbent|, min over leaves of committed + MVC(leaf))
/// is the MVC size of `g`.
Decomposition decompose_only(const Graph& g, const SolveConfig& cfg);

/// Exact minimum vertex cover by branch and bound on a highest-degree vertex
/// with degree-0/1 reductions. Intended for leaf-sized graphs; graphs above
/// 64 vertices work but may be slow, and above 1024 are rejected.
std::vector<Vertex> exact_leaf_solve(const Graph& g);

/// MVC size by enumerating vertex subsets in increasing size. Test oracle,
/// at most 24 vertices.
std::size_t brute_force_oracle(const Graph& g);

}  // namespace dbrvc
