// Copyright 2026 The idcode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef IDCODE_IDCODE_H_
#define IDCODE_IDCODE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(IDC_BUILDING_LIBRARY)
#define IDC_API __declspec(dllexport)
#else
#define IDC_API __declspec(dllimport)
#endif
#else
#define IDC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values 1..11 mirror idcode::ErrorCode. */
typedef enum idc_status {
  IDC_OK = 0,
  IDC_ERR_INVALID_ARGUMENT = 1,
  IDC_ERR_OUT_OF_RANGE = 2,
  IDC_ERR_PARSE = 3,
  IDC_ERR_IO = 4,
  IDC_ERR_TWINS_PRESENT = 5,
  IDC_ERR_GIRTH_TOO_SMALL = 6,
  IDC_ERR_MIN_DEGREE_TOO_SMALL = 7,
  IDC_ERR_BUDGET_EXCEEDED = 8,
  IDC_ERR_MAX_TRIES_EXHAUSTED = 9,
  IDC_ERR_CAP_EXCEEDED = 10,
  IDC_ERR_INTERNAL = 11
} idc_status;

typedef struct idc_graph idc_graph;
typedef struct idc_multigraph idc_multigraph;

/* Stable name such as "TwinsPresent". Never NULL. */
IDC_API const char* idc_status_name(idc_status status);
/* Message of the last failure on the calling thread; "" after success. */
IDC_API const char* idc_last_error(void);
IDC_API const char* idc_version(void);

/* Strings returned through char** are heap-allocated; release them here. */
IDC_API void idc_string_free(char* s);

/* Graphs. */
IDC_API idc_status idc_graph_load(const char* path, idc_graph** out);
IDC_API idc_status idc_graph_parse(const char* text, idc_graph** out);
IDC_API idc_status idc_graph_generate(const char* spec, idc_graph** out);
/* A generator spec ("petersen", "cycle:5", ...) or else a file path. */
IDC_API idc_status idc_graph_open(const char* spec_or_path, idc_graph** out);
/* edges holds 2*m vertex indices. */
IDC_API idc_status idc_graph_from_edges(int n, const int* edges, size_t m, idc_graph** out);
IDC_API void idc_graph_free(idc_graph* g);
/* The accessors return -1 for a NULL handle. */
IDC_API int idc_graph_order(const idc_graph* g);
IDC_API int idc_graph_edge_count(const idc_graph* g);
IDC_API int idc_graph_max_degree(const idc_graph* g);
IDC_API idc_status idc_graph_to_text(const idc_graph* g, char** out);
/* Atomic write of the edge-list text. */
IDC_API idc_status idc_graph_write(const idc_graph* g, const char* path);
/* {"n","m","girth","x3","x4","twins","false_twins","twin_free"} */
IDC_API idc_status idc_graph_summary(const idc_graph* g, char** json);

IDC_API idc_status idc_multigraph_open(const char* spec_or_path, idc_multigraph** out);
IDC_API void idc_multigraph_free(idc_multigraph* h);
IDC_API int idc_multigraph_order(const idc_multigraph* h);

/* Writes a whole file atomically. */
IDC_API idc_status idc_write_file(const char* path, const char* contents);

/* Verification. valid receives 1 or 0; json is the certificate. */
IDC_API idc_status idc_verify(const idc_graph* g, const int* code, size_t len, int* valid, char** json);

typedef enum idc_solve_method {
  IDC_SOLVE_EXACT = 0,
  IDC_SOLVE_GREEDY = 1,
  IDC_SOLVE_NAIVE = 2,
  IDC_SOLVE_DOMINATION = 3
} idc_solve_method;

/* json = {gamma, optimal, code, nodes}. budget_seconds <= 0 means none.
   Returns IDC_ERR_BUDGET_EXCEEDED with json still set when the search was
   cut short. */
IDC_API idc_status idc_solve(const idc_graph* g, idc_solve_method method, double budget_seconds,
                             char** json);

IDC_API idc_status idc_bounds(const idc_graph* g, char** json);
/* Reference table; csv selects CSV instead of JSON. */
IDC_API idc_status idc_theorem_table(double n, int d, double f_ratio, int delta, int csv, char** out);
IDC_API idc_status idc_beta_gamma(int k, uint64_t* beta, uint64_t* gamma);

IDC_API idc_status idc_forced(const idc_graph* g, char** json);
IDC_API idc_status idc_hasse(const idc_graph* g, char** json);

typedef enum idc_method { IDC_METHOD_LLL = 0, IDC_METHOD_GIRTH5 = 1, IDC_METHOD_RRG = 2 } idc_method;

typedef struct idc_construct_options {
  idc_method method;
  uint64_t seed;
  int girth5_case; /* 1 or 2 */
  int64_t max_resamples;
  int max_restarts;
} idc_construct_options;

/* Defaults: rrg, seed 0, case 1, library resample and restart budgets. */
IDC_API void idc_construct_options_init(idc_construct_options* options);
IDC_API idc_status idc_construct(const idc_graph* g, const idc_construct_options* options, char** json);

/* Extremal families; each returns the graph and a JSON summary. */
IDC_API idc_status idc_extremal_c1(const idc_multigraph* h, idc_graph** out, char** json);
IDC_API idc_status idc_extremal_c2(const idc_multigraph* h, idc_graph** out, char** json);
IDC_API idc_status idc_extremal_c3(int two_k, int d, idc_graph** out, char** json);
IDC_API idc_status idc_extremal_ak(int k, idc_graph** out, char** json);

/* Configuration model. */
IDC_API idc_status idc_rrg_stats(int n, int d, uint64_t seed, int64_t max_trials, int64_t target_accepted,
                                 char** json);
/* Simple d-regular sample; require_twin_free redraws until twin-free. */
IDC_API idc_status idc_rrg_sample(int n, int d, uint64_t seed, int max_tries, int require_twin_free,
                                  idc_graph** out);

typedef enum idc_experiment_kind { IDC_EXPERIMENT_TABLE1 = 0, IDC_EXPERIMENT_DOMINATION = 1 } idc_experiment_kind;

typedef struct idc_experiment_config {
  idc_experiment_kind kind;
  const int* orders;
  size_t order_count;
  int d;
  int trials;
  uint64_t seed;
  const char* methods; /* comma list; NULL for all */
  double budget_seconds;
  int timings;
  int threads; /* 0: IDCODE_THREADS or hardware concurrency */
} idc_experiment_config;

/* json and csv may each be NULL when not wanted. */
IDC_API idc_status idc_experiment(const idc_experiment_config* config, char** json, char** csv);

/* Connected graphs up to isomorphism with 1..max_n vertices as JSON. */
IDC_API idc_status idc_corpus(int max_n, char** json);

#ifdef __cplusplus
}
#endif

#endif /* IDCODE_IDCODE_H_ */
