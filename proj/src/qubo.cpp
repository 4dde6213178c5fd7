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

#include "dbrvc/qubo.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>

#include "dbrvc/errors.hpp"
#include "detail/couplers.hpp"

namespace dbrvc {
namespace {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

}  // namespace

Qubo build_mvc_qubo(const Graph& g, double penalty_a, double size_b) {
    if (!(size_b > 0.0) || !(size_b < penalty_a)) {
        throw ConfigError("MVC QUBO weights need 0 < B < A (got A=" + format_double(penalty_a) +
                          ", B=" + format_double(size_b) + ")");
    }
    Qubo q;
    q.n = g.num_vertices();
    q.penalty_a = penalty_a;
    q.size_b = size_b;
    q.offset = penalty_a * static_cast<double>(g.num_edges());
    q.linear.resize(q.n);
    for (Vertex v = 0; v < q.n; ++v) q.linear[v] = size_b - penalty_a * static_cast<double>(g.degree(v));
    for (const Edge& e : g.edges()) q.quadratic.emplace(std::pair{e.u, e.v}, penalty_a);
    return q;
}

double evaluate(const Qubo& q, const Assignment& x) {
    if (x.size() != q.n) {
        throw InvalidArgument("assignment has " + std::to_string(x.size()) + " bits, QUBO has " +
                              std::to_string(q.n) + " variables");
    }
    double e = q.offset;
    for (std::size_t i = 0; i < q.n; ++i) {
        if (x[i]) e += q.linear[i];
    }
    for (const auto& [key, w] : q.quadratic) {
        if (x[key.first] && x[key.second]) e += w;
    }
    return e;
}

bool binary_value_less(const Assignment& a, const Assignment& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = n; k-- > 0;) {
        const int ai = k < a.size() ? a[k] != 0 : 0;
        const int bi = k < b.size() ? b[k] != 0 : 0;
        if (ai != bi) return ai < bi;
    }
    return false;
}

QuboSolution solve_exhaustive(const Qubo& q, std::size_t cap) {
    if (q.n > cap || q.n >= 63) {
        throw SolverError("exhaustive QUBO solve limited to " + std::to_string(cap) + " variables (got " +
                          std::to_string(q.n) + "); use the annealing solver");
    }
    const auto csr = detail::couplers(q);
    Assignment x(q.n, 0);
    std::vector<double> field(q.linear);
    double energy = q.offset;

    Assignment best_bits = x;
    double best = q.offset;
    std::uint64_t best_code = 0;
    const double slack = 1e-9 * std::max(1.0, std::abs(q.offset));

    // Gray-code walk: one flip per step, energy updated from local fields.
    const std::uint64_t total = std::uint64_t{1} << q.n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const auto i = static_cast<std::size_t>(std::countr_zero(k));
        const double sign = x[i] ? -1.0 : 1.0;
        energy += sign * field[i];
        x[i] ^= 1U;
        for (std::size_t p = csr.offsets[i]; p < csr.offsets[i + 1]; ++p) field[csr.targets[p]] += sign * csr.weights[p];

        if (energy > best + slack) continue;
        const double exact = evaluate(q, x);
        const std::uint64_t code = k ^ (k >> 1);
        if (exact < best || (exact == best && code < best_code)) {
            best = exact;
            best_code = code;
            best_bits = x;
        }
        energy = exact;
    }
    return {std::move(best_bits), best};
}

std::vector<Vertex> decode_cover(const Graph& g, const Assignment& x) {
    if (x.size() != g.num_vertices()) {
        throw InvalidArgument("decode_cover: assignment length does not match the graph");
    }
    std::vector<bool> in(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) in[v] = x[v] != 0;
    for (const Edge& e : g.edges()) {
        if (in[e.u] || in[e.v]) continue;
        in[g.degree(e.v) > g.degree(e.u) ? e.v : e.u] = true;
    }
    for (Vertex v = static_cast<Vertex>(g.num_vertices()); v-- > 0;) {
        if (!in[v]) continue;
        auto nbrs = g.neighbors(v);
        if (std::all_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return in[u]; })) in[v] = false;
    }
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (in[v]) cover.push_back(v);
    }
    return cover;
}

std::string export_qubo(const Qubo& q) {
    std::size_t n_linear = 0;
    for (double w : q.linear) n_linear += w != 0.0;
    std::size_t n_quadratic = 0;
    for (const auto& [key, w] : q.quadratic) n_quadratic += w != 0.0;

    std::ostringstream out;
    out << "c offset " << format_double(q.offset) << '\n';
    out << "c A " << format_double(q.penalty_a) << " B " << format_double(q.size_b) << '\n';
    out << "p qubo 0 " << q.n << ' ' << n_linear << ' ' << n_quadratic << '\n';
    for (std::size_t i = 0; i < q.n; ++i) {
        if (q.linear[i] != 0.0) out << i << ' ' << i << ' ' << format_double(q.linear[i]) << '\n';
    }
    for (const auto& [key, w] : q.quadratic) {
        if (w != 0.0) out << key.first << ' ' << key.second << ' ' << format_double(w) << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no) {
    T value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, "bad number '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Qubo parse_qubo(std::string_view text) {
    Qubo q;
    bool have_header = false;
    std::size_t want_linear = 0, want_quadratic = 0, got_linear = 0, got_quadratic = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = tokens(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (tok.empty()) continue;
        if (tok[0] == "c") {
            if (tok.size() == 3 && tok[1] == "offset") q.offset = parse_number<double>(tok[2], line_no);
            if (tok.size() == 5 && tok[1] == "A" && tok[3] == "B") {
                q.penalty_a = parse_number<double>(tok[2], line_no);
                q.size_b = parse_number<double>(tok[4], line_no);
            }
            continue;
        }
        if (tok[0] == "p") {
            if (have_header) throw ParseError(line_no, "duplicate header");
            if (tok.size() != 6 || tok[1] != "qubo") {
                throw ParseError(line_no, "malformed header, expected 'p qubo 0 <n> <linear> <quadratic>'");
            }
            q.n = parse_number<std::size_t>(tok[3], line_no);
            want_linear = parse_number<std::size_t>(tok[4], line_no);
            want_quadratic = parse_number<std::size_t>(tok[5], line_no);
            q.linear.assign(q.n, 0.0);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(line_no, "term before 'p qubo' header");
        if (tok.size() != 3) throw ParseError(line_no, "expected '<i> <j> <value>'");
        auto i = parse_number<std::uint32_t>(tok[0], line_no);
        auto j = parse_number<std::uint32_t>(tok[1], line_no);
        const double w = parse_number<double>(tok[2], line_no);
        if (i >= q.n || j >= q.n) throw ParseError(line_no, "variable index out of range");
        if (i == j) {
            q.linear[i] += w;
            ++got_linear;
        } else {
            if (i > j) std::swap(i, j);
            q.quadratic[{i, j}] += w;
            ++got_quadratic;
        }
    }
    if (!have_header) throw ParseError(0, "missing 'p qubo' header");
    if (got_linear != want_linear || got_quadratic != want_quadratic) {
        throw ParseError(0, "term counts do not match the header");
    }
    return q;
}

}  // namespace dbrvc
