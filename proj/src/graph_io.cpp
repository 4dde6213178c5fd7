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

#include "dbrvc/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "dbrvc/errors.hpp"

namespace dbrvc {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        fn(line, line_no);
        if (end == text.size()) break;
        pos = end + 1;
    }
}

bool is_blank(std::string_view text) {
    return std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

Vertex checked_index(std::int64_t one_based, std::int64_t n, std::size_t line_no) {
    if (one_based < 1 || one_based > n) {
        throw ParseError(line_no, "vertex index " + std::to_string(one_based) + " outside declared range 1.." +
                                          std::to_string(n));
    }
    return static_cast<Vertex>(one_based - 1);
}

std::vector<std::int64_t> one_based_labels(std::size_t n) {
    std::vector<std::int64_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<std::int64_t>(i) + 1;
    return labels;
}

LoadedGraph parse_dimacs(std::string_view text) {
    std::int64_t n = -1;
    std::vector<Edge> edges;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        auto tok = split_tokens(line);
        if (tok.empty() || tok[0] == "c") return;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "duplicate problem line");
            if (tok.size() != 4) throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            if (tok[1] != "edge" && tok[1] != "col" && tok[1] != "edges") {
                throw ParseError(line_no, "unsupported problem type '" + std::string(tok[1]) + "'");
            }
            n = parse_int(tok[2], line_no, "vertex count");
            const std::int64_t m = parse_int(tok[3], line_no, "edge count");
            if (n < 0 || m < 0) throw ParseError(line_no, "negative counts in header");
            edges.reserve(static_cast<std::size_t>(m));
            return;
        }
        if (tok[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge line before 'p edge' header");
            if (tok.size() != 3) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            const Vertex u = checked_index(parse_int(tok[1], line_no, "endpoint"), n, line_no);
            const Vertex v = checked_index(parse_int(tok[2], line_no, "endpoint"), n, line_no);
            edges.push_back({u, v});
            return;
        }
        throw ParseError(line_no, "unrecognized line type '" + std::string(tok[0]) + "'");
    });
    if (n < 0) throw ParseError(0, "missing 'p edge <n> <m>' header");
    return {Graph::from_edges(static_cast<std::size_t>(n), edges), one_based_labels(static_cast<std::size_t>(n))};
}

LoadedGraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::int64_t, Vertex> ids;
    std::vector<std::int64_t> labels;
    std::vector<Edge> edges;
    auto intern = [&](std::int64_t label) {
        auto [it, inserted] = ids.emplace(label, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        auto tok = split_tokens(line);
        if (tok.empty() || tok[0].front() == '#' || tok[0].front() == '%') return;
        if (tok.size() == 1) {
            intern(parse_int(tok[0], line_no, "vertex"));
            return;
        }
        if (tok.size() > 3) throw ParseError(line_no, "expected '<u> <v>' (an optional third weight column is ignored)");
        const Vertex u = intern(parse_int(tok[0], line_no, "endpoint"));
        const Vertex v = intern(parse_int(tok[1], line_no, "endpoint"));
        edges.push_back({u, v});
    });
    return {Graph::from_edges(labels.size(), edges), std::move(labels)};
}

LoadedGraph parse_matrix_market(std::string_view text) {
    bool seen_banner = false;
    bool seen_size = false;
    std::int64_t n = 0;
    std::vector<Edge> edges;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (!seen_banner) {
            auto tok = split_tokens(line);
            if (tok.empty()) return;
            std::string lowered(line);
            std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
            auto low = split_tokens(lowered);
            if (low.size() < 5 || low[0] != "%%matrixmarket" || low[1] != "matrix") {
                throw ParseError(line_no, "missing '%%MatrixMarket matrix coordinate ...' banner");
            }
            if (low[2] != "coordinate") throw ParseError(line_no, "only coordinate MatrixMarket files are supported");
            seen_banner = true;
            return;
        }
        auto tok = split_tokens(line);
        if (tok.empty() || tok[0].front() == '%') return;
        if (!seen_size) {
            if (tok.size() != 3) throw ParseError(line_no, "malformed size line, expected '<rows> <cols> <nnz>'");
            const std::int64_t rows = parse_int(tok[0], line_no, "row count");
            const std::int64_t cols = parse_int(tok[1], line_no, "column count");
            parse_int(tok[2], line_no, "entry count");
            if (rows != cols) throw ParseError(line_no, "adjacency matrix must be square");
            if (rows < 0) throw ParseError(line_no, "negative dimension");
            n = rows;
            seen_size = true;
            return;
        }
        if (tok.size() < 2) throw ParseError(line_no, "malformed entry, expected '<row> <col> [value]'");
        const Vertex u = checked_index(parse_int(tok[0], line_no, "row"), n, line_no);
        const Vertex v = checked_index(parse_int(tok[1], line_no, "column"), n, line_no);
        edges.push_back({u, v});
    });
    if (!seen_banner) throw ParseError(0, "empty input");
    if (!seen_size) throw ParseError(0, "missing MatrixMarket size line");
    return {Graph::from_edges(static_cast<std::size_t>(n), edges), one_based_labels(static_cast<std::size_t>(n))};
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "dimacs") return GraphFormat::dimacs;
    if (name == "edge_list" || name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
    if (name == "matrix_market" || name == "matrix-market" || name == "mtx") return GraphFormat::matrix_market;
    throw ConfigError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format) {
    switch (format) {
        case GraphFormat::dimacs: return "dimacs";
        case GraphFormat::edge_list: return "edge_list";
        case GraphFormat::matrix_market: return "matrix_market";
    }
    return "unknown";
}

GraphFormat guess_graph_format(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".col" || ext == ".clq" || ext == ".dimacs" || ext == ".dim") return GraphFormat::dimacs;
    if (ext == ".mtx" || ext == ".mm") return GraphFormat::matrix_market;
    return GraphFormat::edge_list;
}

LoadedGraph parse_graph_labeled(std::string_view text, GraphFormat format) {
    if (is_blank(text)) throw ParseError(0, "empty input");
    switch (format) {
        case GraphFormat::dimacs: return parse_dimacs(text);
        case GraphFormat::edge_list: return parse_edge_list(text);
        case GraphFormat::matrix_market: return parse_matrix_market(text);
    }
    throw ConfigError("unknown graph format");
}

Graph parse_graph(std::string_view text, GraphFormat format) { return parse_graph_labeled(text, format).graph; }

LoadedGraph load_graph(const std::filesystem::path& path, GraphFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_labeled(buf.str(), format);
}

std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << '\n';
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    // Isolated vertices are written as single-id lines so they survive a
    // round trip; vertices are declared up front to pin the numbering.
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << v << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string write_matrix_market(const Graph& g) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
    // Lower triangle, as the symmetric storage convention requires.
    for (const Edge& e : g.edges()) out << e.v + 1 << ' ' << e.u + 1 << '\n';
    return out.str();
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::dimacs: return write_dimacs(g);
        case GraphFormat::edge_list: return write_edge_list(g);
        case GraphFormat::matrix_market: return write_matrix_market(g);
    }
    throw ConfigError("unknown graph format");
}

}  // namespace dbrvc
