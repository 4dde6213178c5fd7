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

#include <cstring>
#include <filesystem>
#include <string>
#include <vector>

#include "dbrvc/dbrvc.h"

namespace {

std::string take(char* s) {
    std::string out(s);
    dbr_string_free(s);
    return out;
}

dbr_graph* parse(const std::string& text, dbr_format f = DBR_FORMAT_DIMACS) {
    dbr_graph* g = nullptr;
    REQUIRE(dbr_graph_parse(text.data(), text.size(), f, &g) == DBR_OK);
    return g;
}

dbr_config* config() {
    dbr_config* c = nullptr;
    REQUIRE(dbr_config_new(&c) == DBR_OK);
    return c;
}

const std::string kTriangle = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";

}  // namespace

TEST_CASE("solve through the C API", "[capi]") {
    dbr_graph* g = parse(kTriangle);
    dbr_config* c = config();
    dbr_result* r = nullptr;
    REQUIRE(dbr_solve(g, c, &r) == DBR_OK);
    CHECK(dbr_result_size(r) == 2);
    CHECK(dbr_result_leaf_count(r) == 1);
    size_t len = 0;
    const uint32_t* cover = dbr_result_cover(r, &len);
    REQUIRE(len == 2);
    int ok = 0;
    REQUIRE(dbr_graph_is_cover(g, cover, len, &ok) == DBR_OK);
    CHECK(ok == 1);
    CHECK(dbr_result_solution_seconds(r) ==
          dbr_result_preprocessing_seconds(r) + dbr_config_qpu_seconds_per_leaf(c) * 1.0);

    char* json = nullptr;
    REQUIRE(dbr_result_to_json(r, g, c, &json) == DBR_OK);
    auto text = take(json);
    CHECK(text.find("\"size\": 2") != std::string::npos);
    CHECK(text.find("\"valid_cover\": true") != std::string::npos);

    dbr_result_free(r);
    dbr_config_free(c);
    dbr_graph_free(g);
}

TEST_CASE("parse errors report status and line", "[capi]") {
    dbr_graph* g = nullptr;
    const std::string bad = "p edge 2 1\ne 1 3\n";
    CHECK(dbr_graph_parse(bad.data(), bad.size(), DBR_FORMAT_DIMACS, &g) == DBR_ERR_PARSE);
    CHECK(g == nullptr);
    CHECK(dbr_last_error_line() == 2);
    CHECK(std::strlen(dbr_last_error()) > 0);
    CHECK(dbr_graph_parse("", 0, DBR_FORMAT_DIMACS, &g) == DBR_ERR_PARSE);
    CHECK(dbr_graph_load("/nonexistent/file.dimacs", DBR_FORMAT_DIMACS, &g) == DBR_ERR_IO);
}

TEST_CASE("null arguments are rejected", "[capi]") {
    CHECK(dbr_solve(nullptr, nullptr, nullptr) == DBR_ERR_INVALID_ARGUMENT);
    CHECK(dbr_graph_parse("x", 1, DBR_FORMAT_DIMACS, nullptr) == DBR_ERR_INVALID_ARGUMENT);
    CHECK(dbr_result_size(nullptr) == 0);
    dbr_graph_free(nullptr);
    dbr_config_free(nullptr);
    dbr_result_free(nullptr);
}

TEST_CASE("configuration keys", "[capi]") {
    dbr_config* c = config();
    CHECK(dbr_config_set(c, "leaf-size", "pegasus") == DBR_OK);
    CHECK(dbr_config_leaf_size(c) == 180);
    CHECK(dbr_config_set(c, "leaf-size", "2000q") == DBR_OK);
    CHECK(dbr_config_leaf_size(c) == 65);
    CHECK(dbr_config_set(c, "select", "median") == DBR_OK);
    CHECK(dbr_config_set(c, "lower-bound", "matching,spectral") == DBR_OK);
    CHECK(dbr_config_set(c, "upper-bound", "clique") == DBR_OK);
    CHECK(dbr_config_set(c, "reduction", "all") == DBR_OK);
    CHECK(dbr_config_set(c, "leaf-solver", "qubo-anneal") == DBR_OK);
    CHECK(dbr_config_set(c, "qpu-seconds-per-leaf", "2.5") == DBR_OK);
    CHECK(dbr_config_qpu_seconds_per_leaf(c) == 2.5);
    CHECK(dbr_config_set(c, "seed", "12") == DBR_OK);
    CHECK(dbr_config_validate(c) == DBR_OK);
    char* fp = nullptr;
    REQUIRE(dbr_config_fingerprint(c, &fp) == DBR_OK);
    auto f = take(fp);
    CHECK(f.find("select=median") != std::string::npos);
    CHECK(f.find("seed=12") != std::string::npos);

    CHECK(dbr_config_set(c, "select", "sideways") == DBR_ERR_CONFIG);
    CHECK(dbr_config_set(c, "reduction", "folding") == DBR_ERR_CONFIG);
    CHECK(dbr_config_set(c, "colour", "red") == DBR_ERR_CONFIG);
    CHECK(dbr_config_set(c, "seed", "-1") == DBR_ERR_CONFIG);

    dbr_config* clone = nullptr;
    REQUIRE(dbr_config_clone(c, &clone) == DBR_OK);
    CHECK(dbr_config_leaf_size(clone) == 65);
    CHECK(dbr_config_set(clone, "leaf-solver", "qubo-exhaustive") == DBR_OK);
    CHECK(dbr_config_validate(clone) == DBR_ERR_CONFIG);
    dbr_config_free(clone);
    dbr_config_free(c);
}

TEST_CASE("graph constructors and writers", "[capi]") {
    const uint32_t edges[] = {0, 1, 1, 2, 2, 0, 0, 0};
    dbr_graph* g = nullptr;
    REQUIRE(dbr_graph_from_edges(3, edges, 4, &g) == DBR_OK);
    CHECK(dbr_graph_num_edges(g) == 3);
    char* text = nullptr;
    REQUIRE(dbr_graph_write(g, DBR_FORMAT_DIMACS, &text) == DBR_OK);
    CHECK(take(text) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    size_t mvc = 0;
    REQUIRE(dbr_graph_oracle_mvc(g, &mvc) == DBR_OK);
    CHECK(mvc == 2);
    dbr_graph_free(g);

    const uint32_t bad[] = {0, 5};
    CHECK(dbr_graph_from_edges(3, bad, 1, &g) == DBR_ERR_INVALID_ARGUMENT);

    REQUIRE(dbr_graph_keller(4, &g) == DBR_OK);
    CHECK(dbr_graph_num_vertices(g) == 171);
    CHECK(dbr_graph_num_edges(g) == 9435);
    dbr_graph_free(g);

    REQUIRE(dbr_graph_random(30, 0.5, 3, &g) == DBR_OK);
    dbr_graph* h = nullptr;
    REQUIRE(dbr_graph_random(30, 0.5, 3, &h) == DBR_OK);
    CHECK(dbr_graph_num_edges(g) == dbr_graph_num_edges(h));
    dbr_graph_free(g);
    dbr_graph_free(h);
    CHECK(dbr_graph_random_avg_degree(10, 10, 0, &g) == DBR_ERR_INVALID_ARGUMENT);
}

TEST_CASE("edge list labels survive", "[capi]") {
    dbr_graph* g = parse("7 9\n9 11\n", DBR_FORMAT_EDGE_LIST);
    int64_t label = 0;
    REQUIRE(dbr_graph_label(g, 2, &label) == DBR_OK);
    CHECK(label == 11);
    CHECK(dbr_graph_label(g, 3, &label) == DBR_ERR_INVALID_ARGUMENT);
    dbr_graph_free(g);

    dbr_format f{};
    CHECK(dbr_format_from_path("x.mtx", &f) == DBR_OK);
    CHECK(f == DBR_FORMAT_MATRIX_MARKET);
    CHECK(dbr_format_from_name("edgelist", &f) == DBR_OK);
    CHECK(f == DBR_FORMAT_EDGE_LIST);
    CHECK(dbr_format_from_name("gml", &f) == DBR_ERR_CONFIG);
}

TEST_CASE("decomposition handles and files", "[capi]") {
    dbr_graph* g = nullptr;
    REQUIRE(dbr_graph_random(40, 0.3, 5, &g) == DBR_OK);
    dbr_config* c = config();
    REQUIRE(dbr_config_set(c, "leaf-size", "12") == DBR_OK);
    dbr_decomposition* d = nullptr;
    REQUIRE(dbr_decompose(g, c, &d) == DBR_OK);
    const size_t leaves = dbr_decomposition_num_leaves(d);
    CHECK(leaves > 0);
    CHECK(dbr_decomposition_incumbent_size(d) > 0);
    for (size_t i = 0; i < leaves; ++i) {
        dbr_graph* leaf = nullptr;
        REQUIRE(dbr_decomposition_leaf_graph(d, i, &leaf) == DBR_OK);
        const uint32_t* map = nullptr;
        size_t map_len = 0;
        REQUIRE(dbr_decomposition_leaf_mapping(d, i, &map, &map_len) == DBR_OK);
        CHECK(map_len == dbr_graph_num_vertices(leaf));
        CHECK(map_len <= 12);
        const uint32_t* committed = nullptr;
        size_t committed_len = 0;
        REQUIRE(dbr_decomposition_leaf_committed(d, i, &committed, &committed_len) == DBR_OK);
        dbr_graph_free(leaf);
    }
    dbr_graph* none = nullptr;
    CHECK(dbr_decomposition_leaf_graph(d, leaves, &none) == DBR_ERR_INVALID_ARGUMENT);

    auto dir = std::filesystem::temp_directory_path() / "dbrvc_capi_decompose";
    std::filesystem::remove_all(dir);
    REQUIRE(dbr_decomposition_write(d, g, c, dir.string().c_str()) == DBR_OK);
    CHECK(std::filesystem::exists(dir / "manifest.json"));
    CHECK(std::filesystem::exists(dir / "leaf_00000.dimacs"));
    std::filesystem::remove_all(dir);

    CHECK(dbr_decomposition_write(d, g, c, "/proc/no_such_dir/x") == DBR_ERR_IO);

    char* json = nullptr;
    REQUIRE(dbr_decomposition_to_json(d, g, c, &json) == DBR_OK);
    CHECK(take(json).find("\"leaves\"") != std::string::npos);

    dbr_decomposition_free(d);
    dbr_config_free(c);
    dbr_graph_free(g);
}

TEST_CASE("qubo handles", "[capi]") {
    dbr_graph* g = parse(kTriangle);
    dbr_qubo* q = nullptr;
    REQUIRE(dbr_qubo_build(g, 2, 1, &q) == DBR_OK);
    CHECK(dbr_qubo_num_variables(q) == 3);
    char* text = nullptr;
    REQUIRE(dbr_qubo_export(q, &text) == DBR_OK);
    auto exported = take(text);
    CHECK(exported.find("0 0 -3\n") != std::string::npos);

    dbr_qubo* back = nullptr;
    REQUIRE(dbr_qubo_parse(exported.data(), exported.size(), &back) == DBR_OK);
    int same = 0;
    REQUIRE(dbr_qubo_equal(q, back, &same) == DBR_OK);
    CHECK(same == 1);

    const uint8_t x[] = {1, 1, 0};
    double h = 0;
    REQUIRE(dbr_qubo_evaluate(q, x, 3, &h) == DBR_OK);
    CHECK(h == 2.0);
    CHECK(dbr_qubo_evaluate(q, x, 2, &h) == DBR_ERR_INVALID_ARGUMENT);

    uint8_t bits[3] = {};
    REQUIRE(dbr_qubo_solve_exhaustive(q, bits, 3, &h) == DBR_OK);
    CHECK(h == 2.0);
    REQUIRE(dbr_qubo_solve_anneal(q, 50, 50, 1, bits, 3, &h) == DBR_OK);
    CHECK(h == 2.0);

    dbr_qubo* invalid = nullptr;
    CHECK(dbr_qubo_build(g, 1, 1, &invalid) == DBR_ERR_CONFIG);
    CHECK(dbr_qubo_parse("nonsense", 8, &invalid) == DBR_ERR_PARSE);

    dbr_qubo_free(back);
    dbr_qubo_free(q);
    dbr_graph_free(g);
}

TEST_CASE("status strings and version", "[capi]") {
    CHECK(std::string(dbr_status_string(DBR_OK)) == "ok");
    CHECK(std::string(dbr_status_string(DBR_ERR_IO)) == "i/o error");
    CHECK(std::strlen(dbr_version()) > 0);
}
