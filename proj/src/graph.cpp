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

#include "dbrvc/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "dbrvc/errors.hpp"
#include "detail/rng.hpp"

namespace dbrvc {

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u >= n || e.v >= n) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") references a vertex outside 0.." + std::to_string(n) + "-1");
        }
        if (e.u == e.v) continue;
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    std::size_t twice_m = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        nbrs.shrink_to_fit();
        twice_m += nbrs.size();
    }
    g.num_edges_ = twice_m / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    const Vertex other = &a == &adj_[u] ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

double Graph::density() const {
    const double n = static_cast<double>(adj_.size());
    if (n < 2) return 0.0;
    return static_cast<double>(num_edges_) / (n * (n - 1) / 2);
}

VertexMapping VertexMapping::identity(std::size_t n) {
    VertexMapping m;
    m.forward.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.forward[i] = static_cast<Vertex>(i);
    return m;
}

VertexMapping VertexMapping::compose(const VertexMapping& inner) const {
    VertexMapping out;
    out.forward.reserve(inner.size());
    for (Vertex v : inner.forward) out.forward.push_back(forward.at(v));
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n ? 1 : 0)) / 2 - g.num_edges());
    for (Vertex u = 0; u < n; ++u) {
        auto nbrs = g.neighbors(u);
        auto it = std::upper_bound(nbrs.begin(), nbrs.end(), u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (it != nbrs.end() && *it == v) {
                ++it;
                continue;
            }
            edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, edges);
}

std::pair<Graph, VertexMapping> induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    const std::size_t n = g.num_vertices();
    std::vector<std::int64_t> new_id(n, -1);
    for (Vertex v : keep) {
        if (v >= n) throw InvalidArgument("induced_subgraph: unknown vertex " + std::to_string(v));
        new_id[v] = 0;
    }
    VertexMapping mapping;
    for (Vertex v = 0; v < n; ++v) {
        if (new_id[v] < 0) continue;
        new_id[v] = static_cast<std::int64_t>(mapping.forward.size());
        mapping.forward.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex u : mapping.forward) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && new_id[v] >= 0) {
                edges.push_back({static_cast<Vertex>(new_id[u]), static_cast<Vertex>(new_id[v])});
            }
        }
    }
    return {Graph::from_edges(mapping.size(), edges), std::move(mapping)};
}

std::pair<Graph, VertexMapping> remove_vertices(const Graph& g, std::span<const Vertex> drop) {
    std::vector<bool> dropped(g.num_vertices(), false);
    for (Vertex v : drop) {
        if (v >= g.num_vertices()) {
            throw InvalidArgument("remove_vertices: unknown vertex " + std::to_string(v));
        }
        dropped[v] = true;
    }
    std::vector<Vertex> keep;
    keep.reserve(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!dropped[v]) keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
    std::vector<bool> in(g.num_vertices(), false);
    for (Vertex v : cover) {
        if (v >= g.num_vertices()) return false;
        in[v] = true;
    }
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (in[u]) continue;
        for (Vertex v : g.neighbors(u)) {
            if (!in[v]) return false;
        }
    }
    return true;
}

Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
    if (!(density >= 0.0 && density <= 1.0)) {
        throw InvalidArgument("random_graph: density must lie in [0, 1]");
    }
    detail::Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            // Draw for every pair so the stream does not depend on density.
            if (detail::uniform01(rng) < density) edges.push_back({u, v});
        }
    }
    return Graph::from_edges(n, edges);
}

Graph random_graph_avg_degree(std::size_t n, double avg_degree, std::uint64_t seed) {
    const double max_degree = n > 0 ? static_cast<double>(n - 1) : 0.0;
    if (!(avg_degree >= 0.0) || avg_degree > max_degree) {
        throw InvalidArgument("random_graph_avg_degree: average degree " + std::to_string(avg_degree) +
                              " outside [0, n-1]");
    }
    const double p = max_degree > 0 ? avg_degree / max_degree : 0.0;
    return random_graph(n, std::min(p, 1.0), seed);
}

Graph keller_graph(unsigned dimension) {
    if (dimension < 2 || dimension > 8) {
        throw InvalidArgument("keller_graph: dimension must lie in [2, 8]");
    }
    // Words over {0,1,2,3}; two words are adjacent when they differ in at
    // least two positions and in at least one position by exactly 2 (mod 4).
    auto digit = [](std::uint32_t w, unsigned i) { return (w >> (2 * i)) & 3U; };
    auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
        unsigned differing = 0;
        bool opposite = false;
        for (unsigned i = 0; i < dimension; ++i) {
            const unsigned x = digit(a, i), y = digit(b, i);
            if (x != y) ++differing;
            if (((x + 4 - y) & 3U) == 2) opposite = true;
        }
        return differing >= 2 && opposite;
    };
    const std::uint32_t words = 1U << (2 * dimension);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t w = 1; w < words; ++w) {
        if (adjacent(0, w)) kept.push_back(w);
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < kept.size(); ++i) {
        for (Vertex j = i + 1; j < kept.size(); ++j) {
            if (adjacent(kept[i], kept[j])) edges.push_back({i, j});
        }
    }
    return Graph::from_edges(kept.size(), edges);
}

}  // namespace dbrvc
