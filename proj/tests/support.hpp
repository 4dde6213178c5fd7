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
#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "dbrvc/graph.hpp"

namespace dbrvc::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v});
    return Graph::from_edges(n, es);
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) es.push_back({u, v});
    }
    return Graph::from_edges(n, es);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph::from_edges(n, es);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; ++v) es.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph::from_edges(n, es);
}

// Centre 0, leaves 1..k.
inline Graph star(std::size_t k) {
    std::vector<Edge> es;
    for (Vertex v = 1; v <= k; ++v) es.push_back({0, v});
    return Graph::from_edges(k + 1, es);
}

inline Graph petersen() {
    std::vector<Edge> es;
    for (Vertex i = 0; i < 5; ++i) {
        es.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        es.push_back({i, i + 5});
        es.push_back({i + 5, static_cast<Vertex>(5 + (i + 2) % 5)});
    }
    return Graph::from_edges(10, es);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string data_path(const std::string& name) { return std::string(DBRVC_TEST_DATA) + "/" + name; }

struct CorpusGraph {
    Graph graph;
    std::uint64_t seed;
    double density;
};

// Seeded random graphs with n in [lo, hi] and densities cycling 0.1..0.9.
inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::size_t lo, std::size_t hi, std::uint64_t base) {
    std::vector<CorpusGraph> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = lo + (i * 7 + 3) % (hi - lo + 1);
        const double density = 0.1 * static_cast<double>(1 + i % 9);
        const std::uint64_t seed = base * 1000003ULL + i;
        out.push_back({random_graph(n, density, seed), seed, density});
    }
    return out;
}

}  // namespace dbrvc::testing
