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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc {

enum class GraphFormat { dimacs, edge_list, matrix_market };

/// Accepts "dimacs", "edge_list"/"edgelist", "matrix_market"/"mtx".
GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat format);

/// Guess the format from a file extension (.col/.clq/.dimacs, .mtx, anything
/// else is treated as an edge list).
GraphFormat guess_graph_format(const std::filesystem::path& path);

/// A parsed graph together with the vertex labels used in the input file.
/// `labels[i]` is the label of normalized vertex i.
struct LoadedGraph {
    Graph graph;
    std::vector<std::int64_t> labels;
};

/// DIMACS: `c` comments, one `p edge n m` header, `e u v` lines (1-indexed).
/// Edge list: whitespace separated `u v` pairs, `#`/`%` comments; vertices
/// are numbered in order of first appearance.
/// MatrixMarket: coordinate format, square, 1-indexed; values are ignored.
///
/// Throws ParseError naming the offending line.
LoadedGraph parse_graph_labeled(std::string_view text, GraphFormat format);
Graph parse_graph(std::string_view text, GraphFormat format);

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format);

/// DIMACS writer: comment lines, `p edge n m`, then `e u v` with 1-indexed
/// ids in lexicographic order.
std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments = {});
std::string write_edge_list(const Graph& g);
std::string write_matrix_market(const Graph& g);
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace dbrvc
