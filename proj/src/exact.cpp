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

#include <array>
#include <bit>
#include <string>

#include "dbrvc/engine.hpp"
#include "dbrvc/errors.hpp"

namespace dbrvc {
namespace {

template <std::size_t W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1U; }

    bool none() const {
        for (auto x : w) {
            if (x) return false;
        }
        return true;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
        return c;
    }

    std::size_t first() const {
        for (std::size_t i = 0; i < W; ++i) {
            if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
        }
        return W * 64;
    }

    Bits operator&(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }

    Bits without(const Bits& o) const {
        Bits r;
        for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }

    std::size_t count_and(const Bits& o) const {
        std::size_t c = 0;
        for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(w[i] & o.w[i]));
        return c;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < W; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }
};

template <std::size_t W>
class ExactCover {
 public:
    explicit ExactCover(const Graph& g) : n_(g.num_vertices()), adj_(n_) {
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : g.neighbors(u)) adj_[u].set(v);
        }
    }

    std::vector<Vertex> run() {
        Bits<W> all;
        for (std::size_t v = 0; v < n_; ++v) all.set(v);
        seed_greedy(all);
        search(all, Bits<W>{}, 0);
        std::vector<Vertex> out;
        best_cover_.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
        return out;
    }

 private:
    // Minimum-degree greedy independent set; its complement is the first
    // incumbent.
    void seed_greedy(Bits<W> alive) {
        Bits<W> independent;
        while (!alive.none()) {
            std::size_t pick = 0, best_deg = SIZE_MAX;
            alive.for_each([&](std::size_t v) {
                const std::size_t d = adj_[v].count_and(alive);
                if (d < best_deg) {
                    best_deg = d;
                    pick = v;
                }
            });
            independent.set(pick);
            alive.reset(pick);
            alive = alive.without(adj_[pick]);
        }
        best_cover_ = Bits<W>{};
        for (std::size_t v = 0; v < n_; ++v) {
            if (!independent.test(v)) best_cover_.set(v);
        }
        best_size_ = best_cover_.count();
    }

    // |alive| minus the number of cliques in a greedy clique partition; any
    // independent set takes at most one vertex per clique.
    std::size_t clique_cover_bound(Bits<W> alive) const {
        const std::size_t total = alive.count();
        std::size_t cliques = 0;
        while (!alive.none()) {
            const std::size_t v = alive.first();
            alive.reset(v);
            Bits<W> cand = adj_[v] & alive;
            while (!cand.none()) {
                const std::size_t u = cand.first();
                alive.reset(u);
                cand.reset(u);
                cand = cand & adj_[u];
            }
            ++cliques;
        }
        return total - cliques;
    }

    void search(Bits<W> alive, Bits<W> cover, std::size_t k) {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = alive.first(); v < n_; v = next_alive(alive, v)) {
                const Bits<W> nbrs = adj_[v] & alive;
                const std::size_t d = nbrs.count();
                if (d == 0) {
                    alive.reset(v);
                    changed = true;
                } else if (d == 1) {
                    const std::size_t u = nbrs.first();
                    cover.set(u);
                    ++k;
                    alive.reset(u);
                    alive.reset(v);
                    changed = true;
                }
            }
            if (k >= best_size_) return;
        }
        if (alive.none()) {
            best_size_ = k;
            best_cover_ = cover;
            return;
        }
        if (k + clique_cover_bound(alive) >= best_size_) return;

        std::size_t pick = 0, max_deg = 0;
        alive.for_each([&](std::size_t v) {
            const std::size_t d = adj_[v].count_and(alive);
            if (d > max_deg) {
                max_deg = d;
                pick = v;
            }
        });

        // pick excluded: its whole neighbourhood joins the cover.
        const Bits<W> nbrs = adj_[pick] & alive;
        Bits<W> rest = alive.without(nbrs);
        rest.reset(pick);
        search(rest, cover | nbrs, k + max_deg);

        Bits<W> without_pick = alive;
        without_pick.reset(pick);
        Bits<W> with_pick = cover;
        with_pick.set(pick);
        search(without_pick, with_pick, k + 1);
    }

    std::size_t next_alive(const Bits<W>& alive, std::size_t v) const {
        for (std::size_t u = v + 1; u < n_; ++u) {
            if (alive.test(u)) return u;
        }
        return n_;
    }

    std::size_t n_;
    std::vector<Bits<W>> adj_;
    Bits<W> best_cover_;
    std::size_t best_size_ = 0;
};

template <std::size_t W>
std::vector<Vertex> run_exact(const Graph& g) {
    return ExactCover<W>(g).run();
}

}  // namespace

std::vector<Vertex> exact_leaf_solve(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (g.num_edges() == 0) return {};
    const std::size_t words = (n + 63) / 64;
    switch (words) {
        case 1: return run_exact<1>(g);
        case 2: return run_exact<2>(g);
        case 3: return run_exact<3>(g);
        case 4: return run_exact<4>(g);
        default: break;
    }
    if (words <= 8) return run_exact<8>(g);
    if (words <= 16) return run_exact<16>(g);
    throw SolverError("exact leaf solver supports at most 1024 vertices (got " + std::to_string(n) + ")");
}

std::size_t brute_force_oracle(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > 24) throw InvalidArgument("brute_force_oracle: at most 24 vertices (got " + std::to_string(n) + ")");
    std::vector<std::uint32_t> nbr(n, 0);
    for (const Edge& e : g.edges()) {
        nbr[e.u] |= 1U << e.v;
        nbr[e.v] |= 1U << e.u;
    }
    const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
    auto covers = [&](std::uint32_t s) {
        std::uint32_t outside = full & ~s;
        while (outside) {
            const int v = std::countr_zero(outside);
            outside &= outside - 1;
            if (nbr[static_cast<std::size_t>(v)] & ~s) return false;
        }
        return true;
    };
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            if (covers(0)) return 0;
            continue;
        }
        // Gosper's hack over all k-subsets.
        std::uint32_t s = (1U << k) - 1;
        while (s <= full) {
            if (covers(s)) return k;
            const std::uint32_t c = s & (~s + 1);
            const std::uint32_t r = s + c;
            if (r == 0) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

}  // namespace dbrvc
