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

#include "dbrvc/dbrvc.h"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "dbrvc/engine.hpp"
#include "dbrvc/errors.hpp"
#include "dbrvc/graph_io.hpp"
#include "report.hpp"

struct dbr_graph_s {
    dbrvc::Graph graph;
    std::vector<std::int64_t> labels;
};

struct dbr_config_s {
    dbrvc::SolveConfig cfg;
};

struct dbr_result_s {
    dbrvc::SolveResult result;
};

struct dbr_decomposition_s {
    dbrvc::Decomposition decomposition;
};

struct dbr_qubo_s {
    dbrvc::Qubo qubo;
};

namespace {

thread_local std::string g_last_error;
thread_local std::size_t g_last_error_line = 0;

dbr_status fail(dbr_status status, const std::string& message, std::size_t line = 0) {
    g_last_error = message;
    g_last_error_line = line;
    return status;
}

class IoError : public dbrvc::Error {
 public:
    using dbrvc::Error::Error;
};

template <typename Fn>
dbr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        g_last_error_line = 0;
        return DBR_OK;
    } catch (const dbrvc::ParseError& e) {
        return fail(DBR_ERR_PARSE, e.what(), e.line());
    } catch (const dbrvc::ConfigError& e) {
        return fail(DBR_ERR_CONFIG, e.what());
    } catch (const dbrvc::SolverError& e) {
        return fail(DBR_ERR_SOLVER, e.what());
    } catch (const IoError& e) {
        return fail(DBR_ERR_IO, e.what());
    } catch (const dbrvc::InvalidArgument& e) {
        return fail(DBR_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        return fail(DBR_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(DBR_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(DBR_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DBR_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw dbrvc::InvalidArgument(what);
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

dbrvc::GraphFormat to_format(dbr_format f) {
    switch (f) {
        case DBR_FORMAT_DIMACS: return dbrvc::GraphFormat::dimacs;
        case DBR_FORMAT_EDGE_LIST: return dbrvc::GraphFormat::edge_list;
        case DBR_FORMAT_MATRIX_MARKET: return dbrvc::GraphFormat::matrix_market;
    }
    throw dbrvc::InvalidArgument("unknown graph format");
}

dbr_format from_format(dbrvc::GraphFormat f) {
    switch (f) {
        case dbrvc::GraphFormat::dimacs: return DBR_FORMAT_DIMACS;
        case dbrvc::GraphFormat::edge_list: return DBR_FORMAT_EDGE_LIST;
        case dbrvc::GraphFormat::matrix_market: return DBR_FORMAT_MATRIX_MARKET;
    }
    return DBR_FORMAT_DIMACS;
}

dbr_graph* wrap(dbrvc::Graph g) {
    auto* out = new dbr_graph_s{std::move(g), {}};
    out->labels.resize(out->graph.num_vertices());
    for (std::size_t i = 0; i < out->labels.size(); ++i) out->labels[i] = static_cast<std::int64_t>(i);
    return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    T value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw dbrvc::ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

void set_option(dbrvc::SolveConfig& cfg, std::string_view key, std::string_view value) {
    using namespace dbrvc;
    if (key == "leaf-size") {
        cfg.leaf_size = parse_leaf_size(value);
    } else if (key == "select") {
        cfg.strategy.kind = parse_selection_kind(value);
    } else if (key == "lower-bound") {
        cfg.bounds.lower = parse_lower_bounds(value);
    } else if (key == "upper-bound") {
        cfg.bounds.upper = parse_upper_bounds(value);
    } else if (key == "reduction") {
        auto names = parse_reduction_list(value);
        const ReductionRegistry& reg = cfg.registry ? *cfg.registry : ReductionRegistry::builtin();
        for (const auto& n : names) {
            if (!reg.contains(n)) throw ConfigError("unknown reduction '" + n + "'");
        }
        cfg.reductions = std::move(names);
    } else if (key == "leaf-solver") {
        cfg.leaf_solver = parse_leaf_solver(value);
    } else if (key == "seed") {
        cfg.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "qpu-seconds-per-leaf") {
        cfg.qpu_seconds_per_leaf = parse_number<double>(key, value);
    } else if (key == "penalty-a") {
        cfg.penalty_a = parse_number<double>(key, value);
    } else if (key == "size-b") {
        cfg.size_b = parse_number<double>(key, value);
    } else if (key == "anneal-reads") {
        cfg.anneal.reads = parse_number<std::size_t>(key, value);
    } else if (key == "anneal-sweeps") {
        cfg.anneal.sweeps = parse_number<std::size_t>(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_number<std::size_t>(key, value);
    } else {
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << contents;
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

const dbrvc::Subproblem& leaf_at(const dbr_decomposition* d, size_t i) {
    require(d != nullptr, "decomposition is null");
    if (i >= d->decomposition.leaves.size()) throw dbrvc::InvalidArgument("leaf index out of range");
    return d->decomposition.leaves[i];
}

}  // namespace

extern "C" {

const char* dbr_version(void) { return "0.1.0"; }
const char* dbr_last_error(void) { return g_last_error.c_str(); }
size_t dbr_last_error_line(void) { return g_last_error_line; }

const char* dbr_status_string(dbr_status status) {
    switch (status) {
        case DBR_OK: return "ok";
        case DBR_ERR_INVALID_ARGUMENT: return "invalid argument";
        case DBR_ERR_PARSE: return "parse error";
        case DBR_ERR_CONFIG: return "configuration error";
        case DBR_ERR_SOLVER: return "solver error";
        case DBR_ERR_IO: return "i/o error";
        case DBR_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void dbr_string_free(char* s) { std::free(s); }

dbr_status dbr_format_from_name(const char* name, dbr_format* out) {
    return guarded([&] {
        require(name && out, "null argument");
        *out = from_format(dbrvc::parse_graph_format(name));
    });
}

dbr_status dbr_format_from_path(const char* path, dbr_format* out) {
    return guarded([&] {
        require(path && out, "null argument");
        *out = from_format(dbrvc::guess_graph_format(path));
    });
}

dbr_status dbr_graph_parse(const char* text, size_t len, dbr_format format, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        require(text != nullptr || len == 0, "null text");
        auto loaded = dbrvc::parse_graph_labeled(std::string_view(text ? text : "", len), to_format(format));
        *out = new dbr_graph_s{std::move(loaded.graph), std::move(loaded.labels)};
    });
}

dbr_status dbr_graph_load(const char* path, dbr_format format, dbr_graph** out) {
    return guarded([&] {
        require(path && out, "null argument");
        std::ifstream probe(path);
        if (!probe) throw IoError(std::string("cannot open '") + path + "'");
        auto loaded = dbrvc::load_graph(path, to_format(format));
        *out = new dbr_graph_s{std::move(loaded.graph), std::move(loaded.labels)};
    });
}

dbr_status dbr_graph_from_edges(size_t n, const uint32_t* endpoints, size_t num_edges, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        require(endpoints != nullptr || num_edges == 0, "null edge array");
        std::vector<dbrvc::Edge> edges(num_edges);
        for (size_t i = 0; i < num_edges; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        *out = wrap(dbrvc::Graph::from_edges(n, edges));
    });
}

dbr_status dbr_graph_random(size_t n, double density, uint64_t seed, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = wrap(dbrvc::random_graph(n, density, seed));
    });
}

dbr_status dbr_graph_random_avg_degree(size_t n, double avg_degree, uint64_t seed, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = wrap(dbrvc::random_graph_avg_degree(n, avg_degree, seed));
    });
}

dbr_status dbr_graph_keller(unsigned dimension, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = wrap(dbrvc::keller_graph(dimension));
    });
}

void dbr_graph_free(dbr_graph* g) { delete g; }

size_t dbr_graph_num_vertices(const dbr_graph* g) { return g ? g->graph.num_vertices() : 0; }
size_t dbr_graph_num_edges(const dbr_graph* g) { return g ? g->graph.num_edges() : 0; }

dbr_status dbr_graph_label(const dbr_graph* g, size_t v, int64_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        require(v < g->labels.size(), "vertex out of range");
        *out = g->labels[v];
    });
}

dbr_status dbr_graph_write(const dbr_graph* g, dbr_format format, char** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = dup_string(dbrvc::write_graph(g->graph, to_format(format)));
    });
}

dbr_status dbr_graph_is_cover(const dbr_graph* g, const uint32_t* ids, size_t len, int* out) {
    return guarded([&] {
        require(g && out && (ids || len == 0), "null argument");
        *out = dbrvc::is_vertex_cover(g->graph, std::span<const uint32_t>(ids, len)) ? 1 : 0;
    });
}

dbr_status dbr_graph_oracle_mvc(const dbr_graph* g, size_t* out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = dbrvc::brute_force_oracle(g->graph);
    });
}

dbr_status dbr_config_new(dbr_config** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = new dbr_config_s{};
    });
}

dbr_status dbr_config_clone(const dbr_config* cfg, dbr_config** out) {
    return guarded([&] {
        require(cfg && out, "null argument");
        *out = new dbr_config_s{cfg->cfg};
    });
}

void dbr_config_free(dbr_config* cfg) { delete cfg; }

dbr_status dbr_config_set(dbr_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        require(cfg && key && value, "null argument");
        set_option(cfg->cfg, key, value);
    });
}

dbr_status dbr_config_set_seed(dbr_config* cfg, uint64_t seed) {
    return guarded([&] {
        require(cfg != nullptr, "null config");
        cfg->cfg.seed = seed;
    });
}

dbr_status dbr_config_validate(const dbr_config* cfg) {
    return guarded([&] {
        require(cfg != nullptr, "null config");
        cfg->cfg.validate();
    });
}

size_t dbr_config_leaf_size(const dbr_config* cfg) { return cfg ? cfg->cfg.leaf_size : 0; }
double dbr_config_qpu_seconds_per_leaf(const dbr_config* cfg) { return cfg ? cfg->cfg.qpu_seconds_per_leaf : 0.0; }

dbr_status dbr_config_fingerprint(const dbr_config* cfg, char** out) {
    return guarded([&] {
        require(cfg && out, "null argument");
        *out = dup_string(cfg->cfg.fingerprint());
    });
}

dbr_status dbr_solve(const dbr_graph* g, const dbr_config* cfg, dbr_result** out) {
    return guarded([&] {
        require(g && cfg && out, "null argument");
        *out = new dbr_result_s{dbrvc::solve(g->graph, cfg->cfg)};
    });
}

void dbr_result_free(dbr_result* r) { delete r; }
size_t dbr_result_size(const dbr_result* r) { return r ? r->result.size : 0; }
size_t dbr_result_leaf_count(const dbr_result* r) { return r ? r->result.leaf_count : 0; }
size_t dbr_result_subproblems_generated(const dbr_result* r) { return r ? r->result.subproblems_generated : 0; }
size_t dbr_result_subproblems_pruned(const dbr_result* r) { return r ? r->result.subproblems_pruned : 0; }
size_t dbr_result_max_leaf_size(const dbr_result* r) { return r ? r->result.max_leaf_size : 0; }
double dbr_result_preprocessing_seconds(const dbr_result* r) { return r ? r->result.preprocessing_seconds : 0.0; }
double dbr_result_solution_seconds(const dbr_result* r) { return r ? r->result.solution_seconds : 0.0; }

const uint32_t* dbr_result_cover(const dbr_result* r, size_t* len) {
    if (!r) {
        if (len) *len = 0;
        return nullptr;
    }
    if (len) *len = r->result.cover.size();
    return r->result.cover.data();
}

dbr_status dbr_result_to_json(const dbr_result* r, const dbr_graph* g, const dbr_config* cfg, char** out) {
    return guarded([&] {
        require(r && cfg && out, "null argument");
        auto j = dbrvc::report::solve_json(r->result, g ? &g->graph : nullptr, g ? &g->labels : nullptr, cfg->cfg);
        *out = dup_string(j.dump(2));
    });
}

dbr_status dbr_decompose(const dbr_graph* g, const dbr_config* cfg, dbr_decomposition** out) {
    return guarded([&] {
        require(g && cfg && out, "null argument");
        *out = new dbr_decomposition_s{dbrvc::decompose_only(g->graph, cfg->cfg)};
    });
}

void dbr_decomposition_free(dbr_decomposition* d) { delete d; }
size_t dbr_decomposition_num_leaves(const dbr_decomposition* d) { return d ? d->decomposition.leaves.size() : 0; }

double dbr_decomposition_preprocessing_seconds(const dbr_decomposition* d) {
    return d ? d->decomposition.preprocessing_seconds : 0.0;
}

size_t dbr_decomposition_incumbent_size(const dbr_decomposition* d) {
    return d ? d->decomposition.incumbent.size() : 0;
}

dbr_status dbr_decomposition_leaf_graph(const dbr_decomposition* d, size_t i, dbr_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = wrap(leaf_at(d, i).graph);
    });
}

dbr_status dbr_decomposition_leaf_committed(const dbr_decomposition* d, size_t i, const uint32_t** ids, size_t* len) {
    return guarded([&] {
        require(ids && len, "null output");
        const auto& leaf = leaf_at(d, i);
        *ids = leaf.committed.data();
        *len = leaf.committed.size();
    });
}

dbr_status dbr_decomposition_leaf_mapping(const dbr_decomposition* d, size_t i, const uint32_t** ids, size_t* len) {
    return guarded([&] {
        require(ids && len, "null output");
        const auto& leaf = leaf_at(d, i);
        *ids = leaf.mapping.forward.data();
        *len = leaf.mapping.forward.size();
    });
}

dbr_status dbr_decomposition_write(const dbr_decomposition* d, const dbr_graph* g, const dbr_config* cfg,
                                   const char* dir) {
    return guarded([&] {
        require(d && g && cfg && dir, "null argument");
        const std::filesystem::path root(dir);
        std::error_code ec;
        std::filesystem::create_directories(root, ec);
        if (ec || !std::filesystem::is_directory(root)) {
            throw IoError("cannot create output directory '" + root.string() + "'");
        }
        const auto& leaves = d->decomposition.leaves;
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            const auto& leaf = leaves[i];
            std::vector<std::string> comments{
                    "leaf " + std::to_string(i) + " depth " + std::to_string(leaf.depth),
                    "committed " + std::to_string(leaf.committed.size())};
            write_file(root / dbrvc::report::leaf_file_name(i), dbrvc::write_dimacs(leaf.graph, comments));
        }
        auto manifest = dbrvc::report::decomposition_json(d->decomposition, g->graph, cfg->cfg);
        write_file(root / "manifest.json", manifest.dump(2) + "\n");
    });
}

dbr_status dbr_decomposition_to_json(const dbr_decomposition* d, const dbr_graph* g, const dbr_config* cfg,
                                     char** out) {
    return guarded([&] {
        require(d && g && cfg && out, "null argument");
        *out = dup_string(dbrvc::report::decomposition_json(d->decomposition, g->graph, cfg->cfg).dump(2));
    });
}

dbr_status dbr_qubo_build(const dbr_graph* g, double penalty_a, double size_b, dbr_qubo** out) {
    return guarded([&] {
        require(g && out, "null argument");
        *out = new dbr_qubo_s{dbrvc::build_mvc_qubo(g->graph, penalty_a, size_b)};
    });
}

dbr_status dbr_qubo_parse(const char* text, size_t len, dbr_qubo** out) {
    return guarded([&] {
        require(out != nullptr && (text || len == 0), "null argument");
        *out = new dbr_qubo_s{dbrvc::parse_qubo(std::string_view(text ? text : "", len))};
    });
}

void dbr_qubo_free(dbr_qubo* q) { delete q; }
size_t dbr_qubo_num_variables(const dbr_qubo* q) { return q ? q->qubo.n : 0; }

dbr_status dbr_qubo_export(const dbr_qubo* q, char** out) {
    return guarded([&] {
        require(q && out, "null argument");
        *out = dup_string(dbrvc::export_qubo(q->qubo));
    });
}

dbr_status dbr_qubo_evaluate(const dbr_qubo* q, const uint8_t* bits, size_t len, double* out) {
    return guarded([&] {
        require(q && out && (bits || len == 0), "null argument");
        *out = dbrvc::evaluate(q->qubo, dbrvc::Assignment(bits, bits + len));
    });
}

dbr_status dbr_qubo_equal(const dbr_qubo* a, const dbr_qubo* b, int* out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = a->qubo == b->qubo ? 1 : 0;
    });
}

dbr_status dbr_qubo_solve_exhaustive(const dbr_qubo* q, uint8_t* bits, size_t len, double* energy) {
    return guarded([&] {
        require(q && bits && energy, "null argument");
        require(len == q->qubo.n, "output buffer length must equal the variable count");
        auto sol = dbrvc::solve_exhaustive(q->qubo);
        std::copy(sol.bits.begin(), sol.bits.end(), bits);
        *energy = sol.energy;
    });
}

dbr_status dbr_qubo_solve_anneal(const dbr_qubo* q, size_t reads, size_t sweeps, uint64_t seed, uint8_t* bits,
                                 size_t len, double* energy) {
    return guarded([&] {
        require(q && bits && energy, "null argument");
        require(len == q->qubo.n, "output buffer length must equal the variable count");
        dbrvc::AnnealParams params;
        params.reads = reads;
        params.sweeps = sweeps;
        params.seed = seed;
        auto sol = dbrvc::solve_anneal(q->qubo, params);
        std::copy(sol.bits.begin(), sol.bits.end(), bits);
        *energy = sol.energy;
    });
}

}  // extern "C"
