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

#include <catch_amalgamated.hpp>

#include "dbrvc/errors.hpp"
#include "dbrvc/qubo.hpp"
#include "support.hpp"

using namespace dbrvc;
using namespace dbrvc::testing;

namespace {

// Product form A * sum_E (1 - x_u)(1 - x_v) + B * sum_V x_v, written independently
// of the expanded coefficients.
double product_form(const Graph& g, const Assignment& x, double a, double b) {
    double h = 0;
    for (const auto& e : g.edges()) h += a * (1 - x[e.u]) * (1 - x[e.v]);
    for (auto xi : x) h += b * xi;
    return h;
}

Assignment bits_of(std::uint64_t value, std::size_t n) {
    Assignment x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (value >> i) & 1U;
    return x;
}

}  // namespace

TEST_CASE("K3 coefficients", "[qubo]") {
    auto q = build_mvc_qubo(complete(3), 2, 1);
    CHECK(q.n == 3);
    CHECK(q.offset == 6);
    CHECK(q.linear == std::vector<double>{-3, -3, -3});
    CHECK(q.quadratic.size() == 3);
    for (const auto& [k, v] : q.quadratic) CHECK(v == 2);
    for (std::uint64_t m = 0; m < 8; ++m) {
        auto x = bits_of(m, 3);
        CHECK(evaluate(q, x) == product_form(complete(3), x, 2, 1));
    }
}

TEST_CASE("edgeless and single-edge coefficients", "[qubo]") {
    auto e = build_mvc_qubo(Graph(4));
    CHECK(e.offset == 0);
    CHECK(e.linear == std::vector<double>{1, 1, 1, 1});
    CHECK(e.quadratic.empty());
    auto es = solve_exhaustive(e);
    CHECK(es.energy == 0);
    CHECK(es.bits == Assignment(4, 0));

    auto g = complete(2);
    auto q = build_mvc_qubo(g);
    CHECK(q.offset == 2);
    CHECK(q.linear == std::vector<double>{-1, -1});
    CHECK(q.quadratic.at({0, 1}) == 2);
    CHECK(evaluate(q, {1, 0}) == 1);
}

TEST_CASE("weights must satisfy 0 < B < A", "[qubo]") {
    CHECK_THROWS_AS(build_mvc_qubo(complete(3), 1, 1), ConfigError);
    CHECK_THROWS_AS(build_mvc_qubo(complete(3), 2, 0), ConfigError);
    CHECK_THROWS_AS(build_mvc_qubo(complete(3), 2, -1), ConfigError);
    CHECK_NOTHROW(build_mvc_qubo(complete(3), 3, 2));
}

TEST_CASE("evaluate examples", "[qubo]") {
    auto q = build_mvc_qubo(complete(3));
    CHECK(evaluate(q, {1, 1, 0}) == 2);
    CHECK(evaluate(q, {0, 0, 0}) == 6);
    auto r = build_mvc_qubo(random_graph(9, 0.5, 2), 3.5, 1.25);
    CHECK(evaluate(r, Assignment(9, 0)) == r.offset);
    CHECK_THROWS_AS(evaluate(q, {1, 0}), InvalidArgument);
}

TEST_CASE("exhaustive examples", "[qubo]") {
    auto edge = solve_exhaustive(build_mvc_qubo(complete(2)));
    CHECK(edge.energy == 1);
    CHECK(edge.bits[0] + edge.bits[1] == 1);
    // Lowest binary value among the two optima: x0 is the least significant bit.
    CHECK(edge.bits == Assignment{1, 0});

    CHECK(solve_exhaustive(build_mvc_qubo(complete(3))).energy == 2);
    CHECK_THROWS_AS(solve_exhaustive(build_mvc_qubo(Graph(31))), SolverError);
    CHECK_THROWS_AS(solve_exhaustive(build_mvc_qubo(Graph(12)), 10), SolverError);
}

TEST_CASE("exhaustive matches direct enumeration", "[qubo]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_graph(10, 0.4, seed);
        auto q = build_mvc_qubo(g);
        double best = 1e300;
        Assignment arg;
        for (std::uint64_t m = 0; m < (1U << 10); ++m) {
            auto x = bits_of(m, 10);
            double h = product_form(g, x, 2, 1);
            if (h < best || (h == best && binary_value_less(x, arg))) {
                best = h;
                arg = x;
            }
        }
        auto sol = solve_exhaustive(q);
        CHECK(sol.energy == best);
        CHECK(sol.bits == arg);
    }
}

TEST_CASE("anneal examples", "[qubo]") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto e = solve_anneal(build_mvc_qubo(Graph(5)), {.reads = 10, .sweeps = 10, .seed = seed});
        CHECK(e.energy == 0);
        CHECK(e.bits == Assignment(5, 0));
    }
    auto k3 = build_mvc_qubo(complete(3));
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto s = solve_anneal(k3, {.reads = 100, .seed = seed});
        CHECK(s.energy == evaluate(k3, s.bits));
        hits += s.energy == 2;
    }
    CHECK(hits >= 99);
}

TEST_CASE("anneal is deterministic and never beats the ground state", "[qubo]") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto q = build_mvc_qubo(random_graph(14, 0.3, seed));
        auto a = solve_anneal(q, {.reads = 20, .sweeps = 50, .seed = seed});
        auto b = solve_anneal(q, {.reads = 20, .sweeps = 50, .seed = seed});
        CHECK(a.bits == b.bits);
        CHECK(a.energy == evaluate(q, a.bits));
        CHECK(a.energy >= solve_exhaustive(q).energy);
    }
}

TEST_CASE("decode_cover examples", "[qubo]") {
    auto k3 = complete(3);
    CHECK(decode_cover(k3, {1, 1, 0}) == std::vector<Vertex>{0, 1});
    auto repaired = decode_cover(k3, {0, 0, 0});
    CHECK(repaired.size() == 2);
    CHECK(is_vertex_cover(k3, repaired));
    CHECK(decode_cover(complete(2), {1, 1}).size() == 1);
    CHECK_THROWS_AS(decode_cover(k3, {1}), InvalidArgument);
}

TEST_CASE("decode_cover always yields a cover", "[qubo]") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(15, 0.35, seed);
        auto x = bits_of(seed * 2654435761ULL, 15);
        CHECK(is_vertex_cover(g, decode_cover(g, x)));
    }
}

TEST_CASE("export examples", "[qubo]") {
    CHECK(export_qubo(build_mvc_qubo(Graph(2))) == "c offset 0\nc A 2 B 1\np qubo 0 2 2 0\n0 0 1\n1 1 1\n");
    CHECK(export_qubo(build_mvc_qubo(complete(2))) == "c offset 2\nc A 2 B 1\np qubo 0 2 2 1\n0 0 -1\n1 1 -1\n0 1 2\n");
}

TEST_CASE("export round-trips bit-exactly", "[qubo]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto q = build_mvc_qubo(random_graph(20, 0.3, seed), 2.0 + 0.1 * static_cast<double>(seed), 1.0 / 3.0);
        CHECK(parse_qubo(export_qubo(q)) == q);
    }
    CHECK_THROWS_AS(parse_qubo("p qubo 0 2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_qubo("p qubo 0 2 1 0\n0 0 1\n0 1 2\n"), ParseError);
}
