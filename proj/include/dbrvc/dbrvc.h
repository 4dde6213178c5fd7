/*
  Copyright 2026 The dbrvc Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef DBRVC_H_INCLUDED
#define DBRVC_H_INCLUDED

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DBRVC_BUILDING)
#    define DBRVC_API __declspec(dllexport)
#  else
#    define DBRVC_API __declspec(dllimport)
#  endif
#else
#  define DBRVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure a message describing the
   last error on the calling thread is available from dbr_last_error(). */
typedef enum dbr_status_ {
  DBR_OK = 0,
  DBR_ERR_INVALID_ARGUMENT = 1,
  DBR_ERR_PARSE = 2,
  DBR_ERR_CONFIG = 3,
  DBR_ERR_SOLVER = 4,
  DBR_ERR_IO = 5,
  DBR_ERR_INTERNAL = 6
} dbr_status;

typedef enum dbr_format_ {
  DBR_FORMAT_DIMACS = 0,
  DBR_FORMAT_EDGE_LIST = 1,
  DBR_FORMAT_MATRIX_MARKET = 2
} dbr_format;

typedef struct dbr_graph_s dbr_graph;
typedef struct dbr_config_s dbr_config;
typedef struct dbr_result_s dbr_result;
typedef struct dbr_decomposition_s dbr_decomposition;
typedef struct dbr_qubo_s dbr_qubo;

DBRVC_API const char* dbr_version(void);
DBRVC_API const char* dbr_last_error(void);
/* 1-based line of the last parse error, 0 if none or not line specific. */
DBRVC_API size_t dbr_last_error_line(void);
DBRVC_API const char* dbr_status_string(dbr_status status);

/* Strings returned through char** out-parameters are owned by the caller. */
DBRVC_API void dbr_string_free(char* s);

/* ---- graphs ---- */

DBRVC_API dbr_status dbr_format_from_name(const char* name, dbr_format* out);
DBRVC_API dbr_status dbr_format_from_path(const char* path, dbr_format* out);

DBRVC_API dbr_status dbr_graph_parse(const char* text, size_t len, dbr_format format, dbr_graph** out);
DBRVC_API dbr_status dbr_graph_load(const char* path, dbr_format format, dbr_graph** out);
DBRVC_API dbr_status dbr_graph_from_edges(size_t n, const uint32_t* endpoints, size_t num_edges, dbr_graph** out);
DBRVC_API dbr_status dbr_graph_random(size_t n, double density, uint64_t seed, dbr_graph** out);
DBRVC_API dbr_status dbr_graph_random_avg_degree(size_t n, double avg_degree, uint64_t seed, dbr_graph** out);
DBRVC_API dbr_status dbr_graph_keller(unsigned dimension, dbr_graph** out);
DBRVC_API void dbr_graph_free(dbr_graph* g);

DBRVC_API size_t dbr_graph_num_vertices(const dbr_graph* g);
DBRVC_API size_t dbr_graph_num_edges(const dbr_graph* g);
/* Label of vertex v in the source file (1-based for DIMACS/MatrixMarket). */
DBRVC_API dbr_status dbr_graph_label(const dbr_graph* g, size_t v, int64_t* out);
DBRVC_API dbr_status dbr_graph_write(const dbr_graph* g, dbr_format format, char** out);
/* *out is 1 when ids[0..len) is a vertex cover of g. */
DBRVC_API dbr_status dbr_graph_is_cover(const dbr_graph* g, const uint32_t* ids, size_t len, int* out);
/* Exact MVC size by subset enumeration; at most 24 vertices. */
DBRVC_API dbr_status dbr_graph_oracle_mvc(const dbr_graph* g, size_t* out);

/* ---- solver configuration ----
   Defaults: leaf-size 46, select max, lower-bound coloring, upper-bound
   decomposition, reduction neighbor, leaf-solver exact, seed 0.

   Keys and values follow the command line vocabulary:
     leaf-size            46 | 65 | 180 | 2x | 2000q | pegasus | <int>
     select               min | max | median | random
     lower-bound          matching | spectral | min-degree | coloring |
                          deterministic | all | none   (comma lists allowed)
     upper-bound          clique | decomposition | all | none
     reduction            none | neighbor | dominance | all
     leaf-solver          exact | qubo-exhaustive | qubo-anneal
     seed                 <uint64>
     qpu-seconds-per-leaf <real>
     penalty-a, size-b    <real>
     anneal-reads, anneal-sweeps, threads   <int>
*/
DBRVC_API dbr_status dbr_config_new(dbr_config** out);
DBRVC_API dbr_status dbr_config_clone(const dbr_config* cfg, dbr_config** out);
DBRVC_API void dbr_config_free(dbr_config* cfg);
DBRVC_API dbr_status dbr_config_set(dbr_config* cfg, const char* key, const char* value);
DBRVC_API dbr_status dbr_config_set_seed(dbr_config* cfg, uint64_t seed);
DBRVC_API dbr_status dbr_config_validate(const dbr_config* cfg);
DBRVC_API size_t dbr_config_leaf_size(const dbr_config* cfg);
DBRVC_API double dbr_config_qpu_seconds_per_leaf(const dbr_config* cfg);
DBRVC_API dbr_status dbr_config_fingerprint(const dbr_config* cfg, char** out);

/* ---- solving ---- */

DBRVC_API dbr_status dbr_solve(const dbr_graph* g, const dbr_config* cfg, dbr_result** out);
DBRVC_API void dbr_result_free(dbr_result* r);
DBRVC_API size_t dbr_result_size(const dbr_result* r);
DBRVC_API size_t dbr_result_leaf_count(const dbr_result* r);
DBRVC_API size_t dbr_result_subproblems_generated(const dbr_result* r);
DBRVC_API size_t dbr_result_subproblems_pruned(const dbr_result* r);
DBRVC_API size_t dbr_result_max_leaf_size(const dbr_result* r);
DBRVC_API double dbr_result_preprocessing_seconds(const dbr_result* r);
DBRVC_API double dbr_result_solution_seconds(const dbr_result* r);
/* Sorted cover ids; the pointer stays valid until the result is freed. */
DBRVC_API const uint32_t* dbr_result_cover(const dbr_result* r, size_t* len);
/* JSON report. `g` (optional) supplies input labels for "cover_labels". */
DBRVC_API dbr_status dbr_result_to_json(const dbr_result* r, const dbr_graph* g, const dbr_config* cfg, char** out);

/* ---- decomposition without leaf solving ---- */

DBRVC_API dbr_status dbr_decompose(const dbr_graph* g, const dbr_config* cfg, dbr_decomposition** out);
DBRVC_API void dbr_decomposition_free(dbr_decomposition* d);
DBRVC_API size_t dbr_decomposition_num_leaves(const dbr_decomposition* d);
DBRVC_API double dbr_decomposition_preprocessing_seconds(const dbr_decomposition* d);
DBRVC_API size_t dbr_decomposition_incumbent_size(const dbr_decomposition* d);
DBRVC_API dbr_status dbr_decomposition_leaf_graph(const dbr_decomposition* d, size_t i, dbr_graph** out);
DBRVC_API dbr_status dbr_decomposition_leaf_committed(const dbr_decomposition* d, size_t i, const uint32_t** ids,
                                                      size_t* len);
DBRVC_API dbr_status dbr_decomposition_leaf_mapping(const dbr_decomposition* d, size_t i, const uint32_t** ids,
                                                    size_t* len);
/* Writes leaf_<id>.dimacs files and manifest.json into `dir` (created if
   missing). */
DBRVC_API dbr_status dbr_decomposition_write(const dbr_decomposition* d, const dbr_graph* g,
                                             const dbr_config* cfg, const char* dir);
DBRVC_API dbr_status dbr_decomposition_to_json(const dbr_decomposition* d, const dbr_graph* g,
                                               const dbr_config* cfg, char** out);

/* ---- QUBO ---- */

DBRVC_API dbr_status dbr_qubo_build(const dbr_graph* g, double penalty_a, double size_b, dbr_qubo** out);
DBRVC_API dbr_status dbr_qubo_parse(const char* text, size_t len, dbr_qubo** out);
DBRVC_API void dbr_qubo_free(dbr_qubo* q);
DBRVC_API size_t dbr_qubo_num_variables(const dbr_qubo* q);
DBRVC_API dbr_status dbr_qubo_export(const dbr_qubo* q, char** out);
DBRVC_API dbr_status dbr_qubo_evaluate(const dbr_qubo* q, const uint8_t* bits, size_t len, double* out);
/* *out is 1 when both QUBOs hold bit-identical coefficients. */
DBRVC_API dbr_status dbr_qubo_equal(const dbr_qubo* a, const dbr_qubo* b, int* out);
DBRVC_API dbr_status dbr_qubo_solve_exhaustive(const dbr_qubo* q, uint8_t* bits, size_t len, double* energy);
DBRVC_API dbr_status dbr_qubo_solve_anneal(const dbr_qubo* q, size_t reads, size_t sweeps, uint64_t seed,
                                           uint8_t* bits, size_t len, double* energy);

#ifdef __cplusplus
}
#endif

#endif
