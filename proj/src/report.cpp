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

#include "report.hpp"

#include <cstdio>

namespace dbrvc::report {
namespace {

nlohmann::json depth_json(const std::vector<DepthStats>& stats) {
    auto out = nlohmann::json::array();
    for (const auto& d : stats) {
        out.push_back({{"depth", d.depth}, {"generated", d.generated}, {"pruned", d.pruned}, {"leaves", d.leaves}});
    }
    return out;
}

}  // namespace

nlohmann::json solve_json(const SolveResult& r, const Graph* g, const std::vector<std::int64_t>* labels,
                          const SolveConfig& cfg) {
    nlohmann::json j;
    if (g) j["graph"] = {{"n", g->num_vertices()}, {"m", g->num_edges()}};
    j["config"] = cfg.fingerprint();
    j["size"] = r.size;
    j["cover"] = r.cover;
    if (labels && !labels->empty()) {
        auto lab = nlohmann::json::array();
        for (Vertex v : r.cover) lab.push_back((*labels)[v]);
        j["cover_labels"] = std::move(lab);
    }
    if (g) j["valid_cover"] = is_vertex_cover(*g, r.cover);
    j["leaf_count"] = r.leaf_count;
    j["subproblems_generated"] = r.subproblems_generated;
    j["subproblems_pruned"] = r.subproblems_pruned;
    j["max_leaf_size"] = r.max_leaf_size;
    j["preprocessing_seconds"] = r.preprocessing_seconds;
    j["qpu_seconds_per_leaf"] = cfg.qpu_seconds_per_leaf;
    j["solution_seconds"] = r.solution_seconds;
    j["leaf_solver_seconds"] = r.leaf_solver_seconds;
    j["per_depth_stats"] = depth_json(r.per_depth_stats);
    j["warnings"] = r.warnings;
    return j;
}

std::string leaf_file_name(std::size_t id) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "leaf_%05zu.dimacs", id);
    return buf;
}

nlohmann::json decomposition_json(const Decomposition& d, const Graph& g, const SolveConfig& cfg) {
    nlohmann::json j;
    j["graph"] = {{"n", g.num_vertices()}, {"m", g.num_edges()}};
    j["config"] = cfg.fingerprint();
    j["leaf_size"] = cfg.leaf_size;
    j["leaf_count"] = d.leaves.size();
    j["subproblems_generated"] = d.subproblems_generated;
    j["subproblems_pruned"] = d.subproblems_pruned;
    j["preprocessing_seconds"] = d.preprocessing_seconds;
    j["incumbent"] = {{"size", d.incumbent.size()}, {"cover", d.incumbent}};
    auto leaves = nlohmann::json::array();
    for (std::size_t i = 0; i < d.leaves.size(); ++i) {
        const Subproblem& s = d.leaves[i];
        leaves.push_back({{"id", i},
                          {"file", leaf_file_name(i)},
                          {"n", s.graph.num_vertices()},
                          {"m", s.graph.num_edges()},
                          {"depth", s.depth},
                          {"committed_count", s.committed.size()},
                          {"committed", s.committed},
                          {"mapping", s.mapping.forward}});
    }
    j["leaves"] = std::move(leaves);
    j["per_depth_stats"] = depth_json(d.per_depth_stats);
    return j;
}

}  // namespace dbrvc::report
