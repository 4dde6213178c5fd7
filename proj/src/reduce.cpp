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

#include "dbrvc/reduce.hpp"

#include <algorithm>

#include "dbrvc/errors.hpp"
#include "detail/bitset.hpp"

namespace dbrvc {
namespace {

// Mutable view of a residual graph: vertices are only ever deleted, so an
// edge is live iff it exists in the source graph and both ends are alive.
class WorkingGraph {
 public:
    explicit WorkingGraph(const Graph& g) : g_(g), alive_(g.num_vertices(), true), deg_(g.num_vertices()) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) deg_[v] = g.degree(v);
    }

    std::size_t size() const { return g_.num_vertices(); }
    bool alive(Vertex v) const { return alive_[v]; }
    std::size_t degree(Vertex v) const { return deg_[v]; }
    bool has_edge(Vertex u, Vertex v) const { return alive_[u] && alive_[v] && g_.has_edge(u, v); }

    template <typename Fn>
    void for_each_neighbor(Vertex v, Fn&& fn) const {
        for (Vertex u : g_.neighbors(v)) {
            if (alive_[u]) fn(u);
        }
    }

    void commit(Vertex v) {
        committed_.push_back(v);
        erase(v);
    }

    void drop(Vertex v) {
        dropped_.push_back(v);
        erase(v);
    }

    bool changed() const { return !committed_.empty() || !dropped_.empty(); }

    ReductionOutcome finish(const Subproblem& s) const {
        if (!changed()) return {s, 0, 0};
        ReductionOutcome out{s.commit_and_drop(committed_, dropped_), committed_.size() + dropped_.size(),
                             committed_.size()};
        return out;
    }

 private:
    void erase(Vertex v) {
        alive_[v] = false;
        for (Vertex u : g_.neighbors(v)) {
            if (alive_[u]) --deg_[u];
        }
    }

    const Graph& g_;
    std::vector<bool> alive_;
    std::vector<std::size_t> deg_;
    std::vector<Vertex> committed_;
    std::vector<Vertex> dropped_;
};

bool drop_isolated(WorkingGraph& w) {
    bool any = false;
    for (Vertex v = 0; v < w.size(); ++v) {
        if (w.alive(v) && w.degree(v) == 0) {
            w.drop(v);
            any = true;
        }
    }
    return any;
}

bool apply_pendant(WorkingGraph& w) {
    for (Vertex v = 0; v < w.size(); ++v) {
        if (!w.alive(v) || w.degree(v) != 1) continue;
        Vertex u = v;
        w.for_each_neighbor(v, [&](Vertex x) { u = x; });
        w.commit(u);
        w.drop(v);
        return true;
    }
    return false;
}

bool apply_triangle(WorkingGraph& w) {
    for (Vertex a = 0; a < w.size(); ++a) {
        if (!w.alive(a) || w.degree(a) != 2) continue;
        Vertex nbr[2];
        int k = 0;
        w.for_each_neighbor(a, [&](Vertex x) { nbr[k++] = x; });
        if (!w.has_edge(nbr[0], nbr[1])) continue;
        Vertex b, c;
        if (w.degree(nbr[0]) == 2) {
            b = nbr[0];
            c = nbr[1];
        } else if (w.degree(nbr[1]) == 2) {
            b = nbr[1];
            c = nbr[0];
        } else {
            continue;
        }
        w.commit(c);
        w.commit(a);
        w.drop(b);
        return true;
    }
    return false;
}

}  // namespace

ReductionOutcome reduce_neighbor(const Subproblem& s) {
    WorkingGraph w(s.graph);
    while (drop_isolated(w) || apply_pendant(w) || apply_triangle(w)) {
    }
    return w.finish(s);
}

ReductionOutcome reduce_dominance(const Subproblem& s) {
    const Graph& g = s.graph;
    const std::size_t n = g.num_vertices();
    auto closed = detail::adjacency_rows(g);
    for (Vertex v = 0; v < n; ++v) closed[v].set(v);
    detail::DynamicBitset alive(n);
    alive.set_all();

    std::vector<Vertex> committed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex u = 0; u < n; ++u) {
            if (!alive.test(u)) continue;
            for (Vertex v : g.neighbors(u)) {
                if (!alive.test(v)) continue;
                if (closed[u].subset_of_within(closed[v], alive)) {
                    committed.push_back(v);
                    alive.reset(v);
                    changed = true;
                }
            }
        }
    }
    if (committed.empty()) return {s, 0, 0};
    return {s.commit_and_drop(committed, {}), committed.size(), committed.size()};
}

ReductionRegistry ReductionRegistry::with_builtins() {
    ReductionRegistry r;
    r.add("neighbor", reduce_neighbor);
    r.add("dominance", reduce_dominance);
    return r;
}

const ReductionRegistry& ReductionRegistry::builtin() {
    static const ReductionRegistry registry = with_builtins();
    return registry;
}

void ReductionRegistry::add(std::string name, ReductionFn fn) { rules_[std::move(name)] = std::move(fn); }

const ReductionFn& ReductionRegistry::find(std::string_view name) const {
    auto it = rules_.find(name);
    if (it == rules_.end()) throw ConfigError("unknown reduction '" + std::string(name) + "'");
    return it->second;
}

bool ReductionRegistry::contains(std::string_view name) const { return rules_.find(name) != rules_.end(); }

std::vector<std::string> ReductionRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, fn] : rules_) out.push_back(name);
    return out;
}

ReductionOutcome reduce_chain(const Subproblem& s, const std::vector<std::string>& enabled,
                              const ReductionRegistry& registry) {
    std::vector<const ReductionFn*> rules;
    for (const auto& name : enabled) rules.push_back(&registry.find(name));

    ReductionOutcome total{s, 0, 0};
    bool changed = !rules.empty();
    while (changed) {
        changed = false;
        for (const ReductionFn* rule : rules) {
            ReductionOutcome step = (*rule)(total.reduced);
            if (step.removed_vertices == 0) continue;
            total.reduced = std::move(step.reduced);
            total.removed_vertices += step.removed_vertices;
            total.cover_contribution += step.cover_contribution;
            changed = true;
        }
    }
    return total;
}

std::vector<std::string> parse_reduction_list(std::string_view spec) {
    std::vector<std::string> out;
    auto push = [&](std::string name) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(std::move(name));
    };
    while (!spec.empty()) {
        auto comma = spec.find(',');
        std::string_view name = spec.substr(0, comma);
        if (name == "all") {
            push("neighbor");
            push("dominance");
        } else if (name == "none" || name.empty()) {
        } else {
            push(std::string(name));
        }
        if (comma == std::string_view::npos) break;
        spec.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace dbrvc
