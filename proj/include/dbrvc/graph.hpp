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
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dbrvc {

using Vertex = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on the dense vertex range 0..n-1.
///
/// Neighbor lists are kept sorted and duplicate free, so `neighbors(v)` is a
/// flat ordered set and `degree(v)` is its size. Instances are immutable after
/// construction and may be shared freely between threads.
class Graph {
 public:
    Graph() = default;

    /// Edgeless graph on `n` vertices.
    explicit Graph(std::size_t n);

    /// Builds a simple graph from an edge list. Self-loops are dropped and
    /// parallel edges (in either orientation) collapsed. Throws
    /// InvalidArgument if an endpoint is >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t num_vertices() const noexcept { return adj_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }
    bool empty() const noexcept { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_vertex(Vertex v) const noexcept { return v < adj_.size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// Edge count over n(n-1)/2; 0 for graphs with fewer than two vertices.
    double density() const;

    friend bool operator==(const Graph&, const Graph&) = default;

 private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

/// Maps vertex ids of a derived graph back to ids of the graph it was cut
/// from. `forward[i]` is the original id of vertex i; the map is injective.
struct VertexMapping {
    std::vector<Vertex> forward;

    static VertexMapping identity(std::size_t n);

    std::size_t size() const noexcept { return forward.size(); }
    Vertex operator()(Vertex v) const { return forward[v]; }

    /// Mapping for `inner`, whose ids index into this mapping's domain.
    VertexMapping compose(const VertexMapping& inner) const;

    friend bool operator==(const VertexMapping&, const VertexMapping&) = default;
};

Graph complement(const Graph& g);

/// Subgraph induced by `keep` (duplicates ignored). New ids follow ascending
/// order of the kept original ids. Throws InvalidArgument on unknown ids.
std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Induced subgraph on every vertex not listed in `drop`.
std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, std::span<const Vertex> drop);

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

/// Erdős–Rényi G(n, p): every one of the n(n-1)/2 pairs is drawn
/// independently with probability `density`. Deterministic for a fixed seed.
Graph random_graph(std::size_t n, double density, std::uint64_t seed);

/// G(n, p) with p = avg_degree / (n - 1).
Graph random_graph_avg_degree(std::size_t n, double avg_degree, std::uint64_t seed);

/// The DIMACS-style Keller graph of the given dimension: the neighbourhood of
/// the all-zero word in the Keller graph on {0,1,2,3}^dim. Dimension 4 gives
/// 171 vertices and 9435 edges.
Graph keller_graph(unsigned dimension);

}  // namespace dbrvc
