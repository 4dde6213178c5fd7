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

#include "dbrvc/engine.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "dbrvc/errors.hpp"
#include "detail/rng.hpp"

namespace dbrvc {

LeafSolver parse_leaf_solver(std::string_view name) {
    if (name == "exact") return LeafSolver::exact;
    if (name == "qubo-exhaustive" || name == "qubo_exhaustive") return LeafSolver::qubo_exhaustive;
    if (name == "qubo-anneal" || name == "qubo_anneal") return LeafSolver::qubo_anneal;
    throw ConfigError("unknown leaf solver '" + std::string(name) + "'");
}

std::string_view leaf_solver_name(LeafSolver s) {
    switch (s) {
        case LeafSolver::exact: return "exact";
        case LeafSolver::qubo_exhaustive: return "qubo-exhaustive";
        case LeafSolver::qubo_anneal: return "qubo-anneal";
    }
    return "unknown";
}

std::size_t parse_leaf_size(std::string_view text) {
    if (text == "2x" || text == "2X") return kLeafSize2X;
    if (text == "2000q" || text == "2000Q") return kLeafSize2000Q;
    if (text == "pegasus" || text == "5000q" || text == "5000Q") return kLeafSizePegasus;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
        throw ConfigError("leaf size must be a positive integer or one of 2x, 2000q, pegasus (got '" +
                          std::string(text) + "')");
    }
    return value;
}

void SolveConfig::validate() const {
    if (leaf_size == 0) throw ConfigError("leaf_size must be at least 1");
    if (threads == 0) throw ConfigError("threads must be at least 1");
    if (!(qpu_seconds_per_leaf >= 0.0)) throw ConfigError("qpu_seconds_per_leaf must be non-negative");
    const ReductionRegistry& reg = registry ? *registry : ReductionRegistry::builtin();
    for (const auto& name : reductions) {
        if (!reg.contains(name)) throw ConfigError("unknown reduction '" + name + "'");
    }
    if (leaf_solver != LeafSolver::exact) {
        if (!(size_b > 0.0) || !(size_b < penalty_a)) throw ConfigError("QUBO weights need 0 < B < A");
    }
    if (leaf_solver == LeafSolver::qubo_exhaustive && leaf_size > exhaustive_cap) {
        throw ConfigError("qubo-exhaustive leaves are capped at " + std::to_string(exhaustive_cap) +
                          " vertices; lower --leaf-size or use qubo-anneal");
    }
    if (leaf_solver == LeafSolver::qubo_anneal && (anneal.reads == 0 || anneal.sweeps == 0)) {
        throw ConfigError("annealer needs at least one read and one sweep");
    }
}

std::string SolveConfig::fingerprint() const {
    auto join = [](const auto& items, auto name) {
        std::string out;
        for (const auto& x : items) {
            if (!out.empty()) out += '+';
            out += name(x);
        }
        return out.empty() ? std::string("none") : out;
    };
    std::ostringstream os;
    os << "leaf=" << leaf_size << ";select=" << selection_name(strategy.kind)
       << ";lower=" << join(bounds.lower, [](LowerBoundMethod m) { return std::string(bound_name(m)); })
       << ";upper=" << join(bounds.upper, [](UpperBoundMethod m) { return std::string(bound_name(m)); })
       << ";reduction=" << join(reductions, [](const std::string& s) { return s; })
       << ";leaf-solver=" << leaf_solver_name(leaf_solver) << ";seed=" << seed;
    return os.str();
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Vertex> lift(const Subproblem& s, const std::vector<Vertex>& local) {
    std::vector<Vertex> mapped;
    mapped.reserve(local.size());
    for (Vertex v : local) mapped.push_back(s.mapping(v));
    std::sort(mapped.begin(), mapped.end());
    std::vector<Vertex> out;
    out.reserve(s.committed.size() + mapped.size());
    std::merge(s.committed.begin(), s.committed.end(), mapped.begin(), mapped.end(), std::back_inserter(out));
    return out;
}

struct WorkerStats {
    std::vector<DepthStats> per_depth;
    std::size_t generated = 0;
    std::size_t pruned = 0;
    std::size_t leaves = 0;
    std::size_t max_leaf = 0;
    double busy_seconds = 0.0;
    double leaf_seconds = 0.0;

    DepthStats& at(std::size_t depth) {
        if (per_depth.size() <= depth) {
            const std::size_t old = per_depth.size();
            per_depth.resize(depth + 1);
            for (std::size_t d = old; d <= depth; ++d) per_depth[d].depth = d;
        }
        return per_depth[depth];
    }

    void merge(const WorkerStats& o) {
        for (const auto& d : o.per_depth) {
            auto& mine = at(d.depth);
            mine.generated += d.generated;
            mine.pruned += d.pruned;
            mine.leaves += d.leaves;
        }
        generated += o.generated;
        pruned += o.pruned;
        leaves += o.leaves;
        max_leaf = std::max(max_leaf, o.max_leaf);
        busy_seconds += o.busy_seconds;
        leaf_seconds += o.leaf_seconds;
    }
};

enum class Source { seed, bound_witness, leaf };

// Shared state of one traversal. With one thread every method is called from
// the same thread; with several, `mu_` guards the incumbent and the leaves
// and `threshold_` may be read without the lock (a stale read only delays
// pruning).
class Traversal {
 public:
    Traversal(const Graph& g, const SolveConfig& cfg, bool solve_leaves)
            : g_(g),
              cfg_(cfg),
              registry_(cfg.registry ? *cfg.registry : ReductionRegistry::builtin()),
              solve_leaves_(solve_leaves),
              prune_(!cfg.bounds.empty()),
              decomposition_bound_(cfg.bounds.has(UpperBoundMethod::decomposition_incumbent)) {}

    void run() {
        const auto start = Clock::now();
        auto seed = ub_greedy_clique(g_);
        best_ = std::move(seed.witness);
        threshold_.store(best_.size());
        seed_seconds_ = seconds_since(start);

        if (cfg_.threads <= 1) {
            run_sequential();
        } else {
            run_parallel();
        }
    }

    std::vector<Vertex> best_;
    std::vector<Subproblem> leaves_;
    WorkerStats stats_;
    double seed_seconds_ = 0.0;
    std::vector<std::string> warnings_;

 private:
    void run_sequential() {
        std::vector<Subproblem> stack;
        stack.push_back(Subproblem::root(g_));
        while (!stack.empty()) {
            Subproblem node = std::move(stack.back());
            stack.pop_back();
            process(std::move(node), stack, stats_);
        }
    }

    void run_parallel() {
        std::mutex queue_mu;
        std::condition_variable cv;
        std::vector<Subproblem> stack;
        stack.push_back(Subproblem::root(g_));
        std::size_t active = 0;
        std::exception_ptr error;
        std::vector<WorkerStats> local(cfg_.threads);

        auto worker = [&](std::size_t id) {
            std::vector<Subproblem> children;
            for (;;) {
                Subproblem node;
                {
                    std::unique_lock lock(queue_mu);
                    cv.wait(lock, [&] { return error || !stack.empty() || active == 0; });
                    if (error || stack.empty()) {
                        cv.notify_all();
                        return;
                    }
                    node = std::move(stack.back());
                    stack.pop_back();
                    ++active;
                }
                try {
                    process(std::move(node), children, local[id]);
                } catch (...) {
                    std::lock_guard lock(queue_mu);
                    if (!error) error = std::current_exception();
                }
                {
                    std::lock_guard lock(queue_mu);
                    for (auto& c : children) stack.push_back(std::move(c));
                    children.clear();
                    --active;
                }
                cv.notify_all();
            }
        };
        std::vector<std::thread> pool;
        for (std::size_t i = 0; i < cfg_.threads; ++i) pool.emplace_back(worker, i);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
        for (const auto& l : local) stats_.merge(l);
    }

    void offer(std::vector<Vertex> cover, Source source) {
        std::lock_guard lock(mu_);
        const std::size_t size = cover.size();
        if (source != Source::leaf || decomposition_bound_) {
            if (size < threshold_.load()) threshold_.store(size);
        }
        if (size < best_.size()) best_ = std::move(cover);
    }

    void process(Subproblem node, std::vector<Subproblem>& out, WorkerStats& stats) {
        const auto start = Clock::now();
        const std::uint64_t ordinal = ordinal_.fetch_add(1);
        ++stats.generated;
        ++stats.at(node.depth).generated;

        if (!cfg_.reductions.empty()) node = reduce_chain(node, cfg_.reductions, registry_).reduced;
        const Graph& residual = node.graph;

        if (residual.num_vertices() <= cfg_.leaf_size) {
            ++stats.leaves;
            ++stats.at(node.depth).leaves;
            stats.max_leaf = std::max(stats.max_leaf, residual.num_vertices());
            if (solve_leaves_) {
                const auto leaf_start = Clock::now();
                auto local = solve_leaf(node, ordinal);
                stats.leaf_seconds += seconds_since(leaf_start);
                offer(lift(node, local), Source::leaf);
            } else {
                std::lock_guard lock(mu_);
                leaves_.push_back(std::move(node));
            }
            stats.busy_seconds += seconds_since(start);
            return;
        }

        if (residual.num_edges() == 0) {
            offer(node.committed, Source::leaf);
            stats.busy_seconds += seconds_since(start);
            return;
        }

        if (prune_) {
            const std::size_t threshold = threshold_.load();
            const std::size_t committed = node.committed_size();
            bool pruned = committed >= threshold;
            if (!pruned) {
                std::optional<std::size_t> incumbent;
                if (decomposition_bound_) incumbent = threshold - committed;
                BoundsReport report = combine_bounds(residual, cfg_.bounds, incumbent);
                if (report.witness_cover && committed + report.witness_cover->size() < threshold) {
                    offer(lift(node, *report.witness_cover), Source::bound_witness);
                }
                pruned = committed + report.lower >= threshold_.load();
            }
            if (pruned) {
                ++stats.pruned;
                ++stats.at(node.depth).pruned;
                stats.busy_seconds += seconds_since(start);
                return;
            }
        }

        SelectionStrategy strategy{cfg_.strategy.kind, detail::mix_seed(cfg_.seed, {node.depth, ordinal})};
        const Vertex v = select_vertex(node, strategy);
        SplitResult children = split(node, v);
        out.push_back(std::move(children.minus));
        out.push_back(std::move(children.plus));
        stats.busy_seconds += seconds_since(start);
    }

    std::vector<Vertex> solve_leaf(const Subproblem& node, std::uint64_t ordinal) {
        const Graph& leaf = node.graph;
        if (leaf.num_edges() == 0) return {};
        try {
            switch (cfg_.leaf_solver) {
                case LeafSolver::exact:
                    if (leaf.num_vertices() > 64) {
                        std::lock_guard lock(mu_);
                        if (warnings_.empty()) {
                            warnings_.push_back("exact leaf solver ran on " + std::to_string(leaf.num_vertices()) +
                                                "-vertex leaves; expect long runtimes above 64 vertices");
                        }
                    }
                    return exact_leaf_solve(leaf);
                case LeafSolver::qubo_exhaustive: {
                    const Qubo q = build_mvc_qubo(leaf, cfg_.penalty_a, cfg_.size_b);
                    return decode_cover(leaf, solve_exhaustive(q, cfg_.exhaustive_cap).bits);
                }
                case LeafSolver::qubo_anneal: {
                    const Qubo q = build_mvc_qubo(leaf, cfg_.penalty_a, cfg_.size_b);
                    AnnealParams params = cfg_.anneal;
                    params.seed = detail::mix_seed(cfg_.seed ^ cfg_.anneal.seed, {node.depth, ordinal, 0xa11ea1});
                    return decode_cover(leaf, solve_anneal(q, params).bits);
                }
            }
        } catch (const std::exception& e) {
            throw SolverError("leaf solver " + std::string(leaf_solver_name(cfg_.leaf_solver)) +
                              " failed on subproblem #" + std::to_string(ordinal) + " (depth " +
                              std::to_string(node.depth) + ", " + std::to_string(leaf.num_vertices()) +
                              " vertices, " + std::to_string(leaf.num_edges()) + " edges): " + e.what());
        }
        return {};
    }

    const Graph& g_;
    const SolveConfig& cfg_;
    const ReductionRegistry& registry_;
    bool solve_leaves_;
    bool prune_;
    bool decomposition_bound_;
    std::mutex mu_;
    std::atomic<std::size_t> threshold_{0};
    std::atomic<std::uint64_t> ordinal_{0};
};

}  // namespace

SolveResult solve(const Graph& g, const SolveConfig& cfg) {
    cfg.validate();
    Traversal t(g, cfg, true);
    t.run();
    if (!is_vertex_cover(g, t.best_)) throw SolverError("internal error: assembled cover is not a vertex cover");

    SolveResult r;
    r.cover = std::move(t.best_);
    r.size = r.cover.size();
    r.leaf_count = t.stats_.leaves;
    r.subproblems_generated = t.stats_.generated;
    r.subproblems_pruned = t.stats_.pruned;
    r.leaf_solver_seconds = t.stats_.leaf_seconds;
    r.preprocessing_seconds = t.seed_seconds_ + std::max(0.0, t.stats_.busy_seconds - t.stats_.leaf_seconds);
    r.solution_seconds = r.preprocessing_seconds + cfg.qpu_seconds_per_leaf * static_cast<double>(r.leaf_count);
    r.max_leaf_size = t.stats_.max_leaf;
    r.per_depth_stats = std::move(t.stats_.per_depth);
    r.warnings = std::move(t.warnings_);
    return r;
}

Decomposition decompose_only(const Graph& g, const SolveConfig& cfg) {
    cfg.validate();
    Traversal t(g, cfg, false);
    t.run();
    Decomposition d;
    d.leaves = std::move(t.leaves_);
    d.incumbent = std::move(t.best_);
    d.subproblems_generated = t.stats_.generated;
    d.subproblems_pruned = t.stats_.pruned;
    d.preprocessing_seconds = t.seed_seconds_ + t.stats_.busy_seconds;
    d.per_depth_stats = std::move(t.stats_.per_depth);
    return d;
}

}  // namespace dbrvc
