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

#include "dbrvc/bounds.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dbrvc/errors.hpp"
#include "detail/bitset.hpp"

namespace dbrvc {
namespace {

// Vertices by descending complement degree (= ascending degree in g), ties by
// id.
std::vector<Vertex> complement_degree_order(const Graph& g) {
    std::vector<Vertex> order(g.num_vertices());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    return order;
}

std::vector<std::string_view> split_list(std::string_view spec) {
    std::vector<std::string_view> out;
    while (!spec.empty()) {
        auto comma = spec.find(',');
        out.push_back(spec.substr(0, comma));
        if (comma == std::string_view::npos) break;
        spec.remove_prefix(comma + 1);
    }
    return out;
}

template <typename T>
void push_unique(std::vector<T>& v, T x) {
    if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

}  // namespace

std::string_view bound_name(LowerBoundMethod m) {
    switch (m) {
        case LowerBoundMethod::matching_half: return "matching";
        case LowerBoundMethod::spectral: return "spectral";
        case LowerBoundMethod::min_degree: return "min-degree";
        case LowerBoundMethod::coloring: return "coloring";
    }
    return "unknown";
}

std::string_view bound_name(UpperBoundMethod m) {
    switch (m) {
        case UpperBoundMethod::greedy_clique: return "clique";
        case UpperBoundMethod::decomposition_incumbent: return "decomposition";
    }
    return "unknown";
}

bool BoundConfig::has(LowerBoundMethod m) const { return std::find(lower.begin(), lower.end(), m) != lower.end(); }
bool BoundConfig::has(UpperBoundMethod m) const { return std::find(upper.begin(), upper.end(), m) != upper.end(); }

BoundConfig BoundConfig::dbr_default() {
    return {{LowerBoundMethod::coloring}, {UpperBoundMethod::decomposition_incumbent}, {}};
}

std::vector<LowerBoundMethod> parse_lower_bounds(std::string_view spec) {
    std::vector<LowerBoundMethod> out;
    for (auto name : split_list(spec)) {
        if (name == "none" || name.empty()) continue;
        if (name == "matching") {
            push_unique(out, LowerBoundMethod::matching_half);
        } else if (name == "spectral") {
            push_unique(out, LowerBoundMethod::spectral);
        } else if (name == "min-degree" || name == "min_degree") {
            push_unique(out, LowerBoundMethod::min_degree);
        } else if (name == "coloring" || name == "chrome") {
            push_unique(out, LowerBoundMethod::coloring);
        } else if (name == "deterministic") {
            push_unique(out, LowerBoundMethod::matching_half);
            push_unique(out, LowerBoundMethod::spectral);
            push_unique(out, LowerBoundMethod::min_degree);
        } else if (name == "all") {
            for (auto m : {LowerBoundMethod::matching_half, LowerBoundMethod::spectral, LowerBoundMethod::min_degree,
                           LowerBoundMethod::coloring}) {
                push_unique(out, m);
            }
        } else {
            throw ConfigError("unknown lower bound '" + std::string(name) + "'");
        }
    }
    return out;
}

std::vector<UpperBoundMethod> parse_upper_bounds(std::string_view spec) {
    std::vector<UpperBoundMethod> out;
    for (auto name : split_list(spec)) {
        if (name == "none" || name.empty()) continue;
        if (name == "clique" || name == "fmc") {
            push_unique(out, UpperBoundMethod::greedy_clique);
        } else if (name == "decomposition") {
            push_unique(out, UpperBoundMethod::decomposition_incumbent);
        } else if (name == "all") {
            push_unique(out, UpperBoundMethod::greedy_clique);
            push_unique(out, UpperBoundMethod::decomposition_incumbent);
        } else {
            throw ConfigError("unknown upper bound '" + std::string(name) + "'");
        }
    }
    return out;
}

std::size_t lb_matching_half(const Graph& g) {
    std::vector<bool> matched(g.num_vertices(), false);
    std::size_t size = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        if (matched[u]) continue;
        for (Vertex v : g.neighbors(u)) {
            if (v > u && !matched[v]) {
                matched[u] = matched[v] = true;
                ++size;
                break;
            }
        }
    }
    return size;
}

std::size_t lb_min_degree(const Graph& g) {
    if (g.num_edges() == 0) return 0;
    std::size_t d = g.degree(0);
    for (Vertex v = 1; v < g.num_vertices(); ++v) d = std::min(d, g.degree(v));
    return d;
}

SpectralBound lb_spectral(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.num_vertices());
    if (g.num_edges() == 0) return {0, false};

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        a(e.u, e.v) = 1.0;
        a(e.v, e.u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) return {0, true};

    const auto& ev = solver.eigenvalues();
    const double radius = ev.cwiseAbs().maxCoeff();
    const double tol = 1e-8 * radius;
    std::size_t pos = 0, neg = 0, zero = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] > tol) {
            ++pos;
        } else if (ev[i] < -tol) {
            ++neg;
        } else {
            ++zero;
        }
    }
    const std::size_t alpha_bound = zero + std::min(pos, neg);
    const std::size_t size = g.num_vertices();
    return {alpha_bound >= size ? 0 : size - alpha_bound, false};
}

std::size_t lb_coloring(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) return 0;
    const auto adj = detail::adjacency_rows(g);
    // A vertex may join a color class of the complement iff it is adjacent in
    // g to every member of that class.
    std::vector<detail::DynamicBitset> classes;
    for (Vertex v : complement_degree_order(g)) {
        bool placed = false;
        for (auto& cls : classes) {
            if (cls.subset_of(adj[v])) {
                cls.set(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.emplace_back(n);
            classes.back().set(v);
        }
    }
    return n - classes.size();
}

CliqueBound ub_greedy_clique(const Graph& g) {
    const std::size_t n = g.num_vertices();
    const auto adj = detail::adjacency_rows(g);
    detail::DynamicBitset independent(n);
    for (Vertex v : complement_degree_order(g)) {
        if (!independent.intersects(adj[v])) independent.set(v);
    }
    CliqueBound out;
    for (Vertex v = 0; v < n; ++v) {
        if (!independent.test(v)) out.witness.push_back(v);
    }
    out.value = out.witness.size();
    return out;
}

BoundsReport combine_bounds(const Graph& g, const BoundConfig& cfg, std::optional<std::size_t> incumbent) {
    BoundsReport r;
    r.lower = 0;
    r.upper = g.num_vertices();

    auto add_lower = [&](std::string label, std::size_t value) {
        r.lower = std::max(r.lower, value);
        r.lower_parts.push_back({std::move(label), value});
    };
    for (auto m : cfg.lower) {
        switch (m) {
            case LowerBoundMethod::matching_half: add_lower("matching", lb_matching_half(g)); break;
            case LowerBoundMethod::min_degree: add_lower("min-degree", lb_min_degree(g)); break;
            case LowerBoundMethod::coloring: add_lower("coloring", lb_coloring(g)); break;
            case LowerBoundMethod::spectral: {
                auto sb = lb_spectral(g);
                r.degraded = r.degraded || sb.degraded;
                add_lower("spectral", sb.value);
                break;
            }
        }
    }
    for (const auto& ext : cfg.lower_extensions) add_lower(ext.label, ext.compute(g));

    if (cfg.has(UpperBoundMethod::greedy_clique)) {
        auto cb = ub_greedy_clique(g);
        r.upper_parts.push_back({"clique", cb.value});
        if (cb.value <= r.upper) {
            r.upper = cb.value;
            r.witness_cover = std::move(cb.witness);
        }
    }
    if (incumbent) {
        r.upper_parts.push_back({"decomposition", *incumbent});
        if (*incumbent < r.upper) {
            r.upper = *incumbent;
            r.witness_cover.reset();
        }
    }
    return r;
}

}  // namespace dbrvc
