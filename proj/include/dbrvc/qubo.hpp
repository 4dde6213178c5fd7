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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc {

using Assignment = std::vector<std::uint8_t>;

/// H(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j.
///
/// For the MVC model of a graph, `penalty_a` and `size_b` record the weights
/// it was built with; other producers may leave them at zero.
struct Qubo {
    std::size_t n = 0;
    std::vector<double> linear;
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> quadratic;  ///< keys have first < second
    double offset = 0.0;
    double penalty_a = 0.0;
    double size_b = 0.0;

    friend bool operator==(const Qubo&, const Qubo&) = default;
};

/// MVC Hamiltonian A * sum_{(u,v) in E} (1 - x_u)(1 - x_v) + B * sum_v x_v in
/// expanded form: offset A|E|, linear B - A deg(v), coupler A per edge.
/// Requires 0 < B < A (ConfigError otherwise).
Qubo build_mvc_qubo(const Graph& g, double penalty_a = 2.0, double size_b = 1.0);

/// Throws InvalidArgument on a length mismatch.
double evaluate(const Qubo& q, const Assignment& x);

/// Orders assignments by their value as binary numbers with x_i worth 2^i.
bool binary_value_less(const Assignment& a, const Assignment& b);

struct QuboSolution {
    Assignment bits;
    double energy = 0.0;
};

inline constexpr std::size_t kDefaultExhaustiveCap = 30;

/// Global minimum by enumeration of all 2^n assignments; ties go to the
/// smallest binary value. Throws SolverError when n exceeds `cap`.
QuboSolution solve_exhaustive(const Qubo& q, std::size_t cap = kDefaultExhaustiveCap);

struct AnnealParams {
    std::size_t reads = 100;
    std::size_t sweeps = 100;
    std::uint64_t seed = 0;
    /// Defaults to the largest absolute coefficient.
    std::optional<double> t_initial;
    double t_final = 1e-3;
};

/// Single-spin-flip simulated annealing with a geometric temperature schedule.
/// Returns the best of `reads` independent restarts with its energy
/// re-evaluated exactly. Deterministic for a fixed seed.
QuboSolution solve_anneal(const Qubo& q, const AnnealParams& params);

/// Reads {v : x_v = 1}, adds the higher-degree endpoint of every uncovered
/// edge, then drops redundant vertices scanning ids from high to low. The
/// result is always a vertex cover of g (sorted ids).
std::vector<Vertex> decode_cover(const Graph& g, const Assignment& x);

/// Sparse text format:
///   c offset <value>
///   c A <value> B <value>
///   p qubo 0 <n> <linear terms> <quadratic terms>
///   <i> <i> <linear>        (nonzero linear terms, sorted)
///   <i> <j> <quadratic>     (i < j, nonzero couplers, sorted)
/// Values use the shortest representation that reads back bit-exactly.
std::string export_qubo(const Qubo& q);

/// Inverse of export_qubo. Throws ParseError.
Qubo parse_qubo(std::string_view text);

}  // namespace dbrvc
