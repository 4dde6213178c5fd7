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

// Command-line front end. Talks to the solver exclusively through the C API.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dbrvc/dbrvc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 5;

struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(dbr_status s) {
    switch (s) {
        case DBR_OK: return kExitOk;
        case DBR_ERR_INVALID_ARGUMENT:
        case DBR_ERR_PARSE:
        case DBR_ERR_CONFIG: return kExitUsage;
        case DBR_ERR_SOLVER: return kExitSolver;
        case DBR_ERR_IO: return kExitIo;
        case DBR_ERR_INTERNAL: return kExitInternal;
    }
    return kExitInternal;
}

void check(dbr_status s, const std::string& context) {
    if (s == DBR_OK) return;
    std::string msg = context + ": " + dbr_status_string(s) + ": " + dbr_last_error();
    throw CliFailure{exit_code_for(s), msg};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<dbr_graph, Deleter<dbr_graph, dbr_graph_free>>;
using ConfigPtr = std::unique_ptr<dbr_config, Deleter<dbr_config, dbr_config_free>>;
using ResultPtr = std::unique_ptr<dbr_result, Deleter<dbr_result, dbr_result_free>>;
using DecompPtr = std::unique_ptr<dbr_decomposition, Deleter<dbr_decomposition, dbr_decomposition_free>>;
using QuboPtr = std::unique_ptr<dbr_qubo, Deleter<dbr_qubo, dbr_qubo_free>>;

std::string take_string(char* s) {
    std::string out(s ? s : "");
    dbr_string_free(s);
    return out;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(v);
}

struct GraphInput {
    std::string path;
    std::string format;

    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "Input graph file")->required();
        cmd->add_option("--format", format, "Input format: dimacs | edgelist | mtx (default: by extension)");
    }

    GraphPtr load() const {
        dbr_format fmt{};
        if (format.empty()) {
            check(dbr_format_from_path(path.c_str(), &fmt), "format");
        } else {
            check(dbr_format_from_name(format.c_str(), &fmt), "format");
        }
        dbr_graph* g = nullptr;
        check(dbr_graph_load(path.c_str(), fmt, &g), path);
        return GraphPtr(g);
    }
};

struct ConfigFlags {
    std::vector<std::pair<std::string, std::string>> values;
    std::optional<std::string> select, lower, upper, reduction, leaf_solver, leaf_size;
    std::optional<std::string> qpu, reads, sweeps, threads;
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--select", select, "Split vertex selection: min | max | median | random");
        cmd->add_option("--lower-bound", lower, "Lower bounds: matching | spectral | min-degree | coloring | all | none");
        cmd->add_option("--upper-bound", upper, "Upper bounds: clique | decomposition | all | none");
        cmd->add_option("--reduction", reduction, "Reductions: none | neighbor | dominance | all");
        cmd->add_option("--leaf-solver", leaf_solver, "Leaf solver: exact | qubo-exhaustive | qubo-anneal");
        cmd->add_option("--leaf-size", leaf_size, "Leaf size: 46 | 65 | 180 | 2x | 2000q | pegasus | <int>");
        cmd->add_option("--seed", seed, "Random seed");
        cmd->add_option("--qpu-seconds-per-leaf", qpu, "Modelled annealer seconds per leaf");
        cmd->add_option("--anneal-reads", reads, "Annealing reads per leaf");
        cmd->add_option("--anneal-sweeps", sweeps, "Annealing sweeps per read");
        cmd->add_option("--threads", threads, "Worker threads");
    }

    ConfigPtr build() const {
        dbr_config* raw = nullptr;
        check(dbr_config_new(&raw), "config");
        ConfigPtr cfg(raw);
        auto set = [&](const char* key, const std::optional<std::string>& v) {
            if (v) check(dbr_config_set(cfg.get(), key, v->c_str()), std::string("--") + key);
        };
        set("select", select);
        set("lower-bound", lower);
        set("upper-bound", upper);
        set("reduction", reduction);
        set("leaf-solver", leaf_solver);
        set("leaf-size", leaf_size);
        set("qpu-seconds-per-leaf", qpu);
        set("anneal-reads", reads);
        set("anneal-sweeps", sweeps);
        set("threads", threads);
        check(dbr_config_set_seed(cfg.get(), seed), "--seed");
        check(dbr_config_validate(cfg.get()), "config");
        return cfg;
    }
};

int run_solve(const GraphInput& in, const ConfigFlags& flags) {
    auto cfg = flags.build();
    auto g = in.load();
    dbr_result* r = nullptr;
    check(dbr_solve(g.get(), cfg.get(), &r), "solve");
    ResultPtr result(r);
    char* json = nullptr;
    check(dbr_result_to_json(result.get(), g.get(), cfg.get(), &json), "report");
    std::cout << take_string(json) << "\n";
    return kExitOk;
}

int run_decompose(const GraphInput& in, const ConfigFlags& flags, const std::string& out_dir) {
    auto cfg = flags.build();
    auto g = in.load();
    dbr_decomposition* d = nullptr;
    check(dbr_decompose(g.get(), cfg.get(), &d), "decompose");
    DecompPtr dec(d);
    check(dbr_decomposition_write(dec.get(), g.get(), cfg.get(), out_dir.c_str()), "write");
    std::cout << "leaves " << dbr_decomposition_num_leaves(dec.get()) << "\n"
              << "incumbent_size " << dbr_decomposition_incumbent_size(dec.get()) << "\n"
              << "preprocessing_seconds " << format_double(dbr_decomposition_preprocessing_seconds(dec.get())) << "\n"
              << "output " << out_dir << "\n";
    return kExitOk;
}

int run_export_qubo(const GraphInput& in, double a, double b, const std::string& out_path) {
    auto g = in.load();
    dbr_qubo* q = nullptr;
    check(dbr_qubo_build(g.get(), a, b, &q), "qubo");
    QuboPtr qubo(q);
    char* text = nullptr;
    check(dbr_qubo_export(qubo.get(), &text), "export");
    std::string body = take_string(text);
    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << body)) throw CliFailure{kExitIo, "cannot write '" + out_path + "'"};
    return kExitOk;
}

// Inclusive arithmetic range "start:stop:step" or a single value.
std::vector<double> parse_range(const std::string& text, const char* what) {
    auto fail = [&] { return CliFailure{kExitUsage, std::string("invalid ") + what + " range '" + text + "'"}; };
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) {
        double v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || !std::isfinite(v)) throw fail();
        parts.push_back(v);
    }
    if (parts.size() == 1) return parts;
    if (parts.size() != 3 || parts[2] <= 0 || parts[1] < parts[0]) throw fail();
    std::vector<double> out;
    const double eps = parts[2] * 1e-9;
    for (std::size_t i = 0;; ++i) {
        double v = parts[0] + static_cast<double>(i) * parts[2];
        if (v > parts[1] + eps) break;
        out.push_back(std::round(v * 1e9) / 1e9);
    }
    return out;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto r = parse_range(item, what);
        out.insert(out.end(), r.begin(), r.end());
    }
    if (out.empty()) throw CliFailure{kExitUsage, std::string("empty ") + what + " list"};
    return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return mix(mix(mix(mix(base) ^ a) ^ b) ^ c);
}

struct BenchOptions {
    std::string n_range;
    std::optional<std::string> density;
    std::optional<std::string> avg_degree;
    std::size_t reps = 10;
    bool no_timing = false;
    bool decompose_only = false;
    bool no_header = false;
};

int run_bench(const BenchOptions& opt, const ConfigFlags& flags) {
    if (opt.density.has_value() == opt.avg_degree.has_value()) {
        throw CliFailure{kExitUsage, "exactly one of --density or --avg-degree is required"};
    }
    if (opt.reps == 0) throw CliFailure{kExitUsage, "--reps must be positive"};
    auto ns = parse_range(opt.n_range, "--n");
    for (double n : ns) {
        if (n < 1 || n != std::floor(n)) throw CliFailure{kExitUsage, "--n values must be positive integers"};
    }
    const bool by_density = opt.density.has_value();
    auto params = by_density ? parse_list(*opt.density, "--density") : parse_list(*opt.avg_degree, "--avg-degree");

    auto cfg = flags.build();
    char* fp = nullptr;
    check(dbr_config_fingerprint(cfg.get(), &fp), "config");
    const std::string fingerprint = take_string(fp) + (opt.decompose_only ? ";decompose-only" : "");
    const double qpu = dbr_config_qpu_seconds_per_leaf(cfg.get());

    if (!opt.no_header) {
        std::cout << "label,n,m,preprocessing_seconds,leaf_count,solution_seconds,cover_size,config\n";
    }
    for (std::size_t ni = 0; ni < ns.size(); ++ni) {
        const auto n = static_cast<std::size_t>(ns[ni]);
        for (std::size_t pi = 0; pi < params.size(); ++pi) {
            const double p = params[pi];
            double m_sum = 0, pre_sum = 0, leaves_sum = 0, sol_sum = 0, cover_sum = 0;
            for (std::size_t rep = 0; rep < opt.reps; ++rep) {
                const std::uint64_t seed = derive_seed(flags.seed, n, pi, rep);
                dbr_graph* raw = nullptr;
                check(by_density ? dbr_graph_random(n, p, seed, &raw) : dbr_graph_random_avg_degree(n, p, seed, &raw),
                      "generate");
                GraphPtr g(raw);
                ConfigPtr run_cfg;
                dbr_config* c = nullptr;
                check(dbr_config_clone(cfg.get(), &c), "config");
                run_cfg.reset(c);
                check(dbr_config_set_seed(run_cfg.get(), seed), "config");
                m_sum += static_cast<double>(dbr_graph_num_edges(g.get()));
                double pre = 0, sol = 0, leaves = 0, cover = 0;
                if (opt.decompose_only) {
                    dbr_decomposition* d = nullptr;
                    check(dbr_decompose(g.get(), run_cfg.get(), &d), "decompose");
                    DecompPtr dec(d);
                    leaves = static_cast<double>(dbr_decomposition_num_leaves(dec.get()));
                    pre = dbr_decomposition_preprocessing_seconds(dec.get());
                    sol = pre + qpu * leaves;
                    cover = std::nan("");
                } else {
                    dbr_result* r = nullptr;
                    check(dbr_solve(g.get(), run_cfg.get(), &r), "solve");
                    ResultPtr res(r);
                    leaves = static_cast<double>(dbr_result_leaf_count(res.get()));
                    pre = dbr_result_preprocessing_seconds(res.get());
                    sol = dbr_result_solution_seconds(res.get());
                    cover = static_cast<double>(dbr_result_size(res.get()));
                }
                if (opt.no_timing) {
                    pre = 0;
                    sol = qpu * leaves;
                }
                pre_sum += pre;
                sol_sum += sol;
                leaves_sum += leaves;
                cover_sum += cover;
            }
            const double k = static_cast<double>(opt.reps);
            const std::string label =
                    "random_n" + std::to_string(n) + (by_density ? "_p" : "_d") + format_double(p);
            std::cout << label << ',' << n << ',' << format_double(m_sum / k) << ',' << format_double(pre_sum / k)
                      << ',' << format_double(leaves_sum / k) << ',' << format_double(sol_sum / k) << ','
                      << (opt.decompose_only ? std::string() : format_double(cover_sum / k)) << ",\"" << fingerprint
                      << "\"\n";
        }
    }
    return kExitOk;
}

int run_generate(const std::string& kind, std::size_t n, double param, unsigned dim, std::uint64_t seed,
                 const std::string& format, const std::string& out_path) {
    dbr_graph* raw = nullptr;
    if (kind == "density") {
        check(dbr_graph_random(n, param, seed, &raw), "generate");
    } else if (kind == "avg-degree") {
        check(dbr_graph_random_avg_degree(n, param, seed, &raw), "generate");
    } else if (kind == "keller") {
        check(dbr_graph_keller(dim, &raw), "generate");
    } else {
        throw CliFailure{kExitUsage, "unknown generator '" + kind + "'"};
    }
    GraphPtr g(raw);
    dbr_format fmt{};
    check(dbr_format_from_name(format.c_str(), &fmt), "format");
    char* text = nullptr;
    check(dbr_graph_write(g.get(), fmt, &text), "write");
    std::string body = take_string(text);
    if (out_path.empty() || out_path == "-") {
        std::cout << body;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << body)) throw CliFailure{kExitIo, "cannot write '" + out_path + "'"};
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact minimum vertex cover by decomposition, bounds and reduction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(dbr_version()));

    GraphInput solve_in, decomp_in, export_in;
    ConfigFlags solve_cfg, decomp_cfg, bench_cfg;

    auto* solve = app.add_subcommand("solve", "Solve a graph and print a JSON report");
    solve_in.attach(solve);
    solve_cfg.attach(solve);

    std::string out_dir;
    auto* decompose = app.add_subcommand("decompose", "Write surviving leaf subproblems and a manifest");
    decomp_in.attach(decompose);
    decomp_cfg.attach(decompose);
    decompose->add_option("-o,--output", out_dir, "Output directory")->required();

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench-random", "Benchmark on seeded random graphs and print CSV");
    bench->add_option("--n", bench_opt.n_range, "Vertex counts: start:stop:step or a single value")->required();
    bench->add_option("--density", bench_opt.density, "Edge densities: start:stop:step or comma list");
    bench->add_option("--avg-degree", bench_opt.avg_degree, "Average degrees: comma list or start:stop:step");
    bench->add_option("--reps", bench_opt.reps, "Repetitions per parameter point");
    bench->add_flag("--no-timing", bench_opt.no_timing, "Report zero preprocessing time for reproducible output");
    bench->add_flag("--decompose-only", bench_opt.decompose_only, "Count surviving leaves without solving them");
    bench->add_flag("--no-header", bench_opt.no_header, "Omit the CSV header line");
    bench_cfg.attach(bench);

    double qa = 2.0, qb = 1.0;
    std::string qubo_out;
    auto* exportq = app.add_subcommand("export-qubo", "Write the vertex cover QUBO of a graph");
    export_in.attach(exportq);
    exportq->add_option("-A,--penalty", qa, "Edge penalty weight A");
    exportq->add_option("-B,--size-weight", qb, "Cover size weight B (0 < B < A)");
    exportq->add_option("-o,--output", qubo_out, "Output path (default: stdout)");

    std::string gen_kind = "density", gen_format = "dimacs", gen_out;
    std::size_t gen_n = 0;
    double gen_param = 0.5;
    unsigned gen_dim = 4;
    std::uint64_t gen_seed = 0;
    auto* generate = app.add_subcommand("generate", "Write a generated graph");
    generate->add_option("kind", gen_kind, "density | avg-degree | keller")->required();
    generate->add_option("--n", gen_n, "Vertex count");
    generate->add_option("--param", gen_param, "Density or average degree");
    generate->add_option("--dim", gen_dim, "Keller dimension");
    generate->add_option("--seed", gen_seed, "Random seed");
    generate->add_option("--format", gen_format, "Output format");
    generate->add_option("-o,--output", gen_out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*solve) return run_solve(solve_in, solve_cfg);
        if (*decompose) return run_decompose(decomp_in, decomp_cfg, out_dir);
        if (*bench) return run_bench(bench_opt, bench_cfg);
        if (*exportq) return run_export_qubo(export_in, qa, qb, qubo_out);
        if (*generate) return run_generate(gen_kind, gen_n, gen_param, gen_dim, gen_seed, gen_format, gen_out);
    } catch (const CliFailure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
