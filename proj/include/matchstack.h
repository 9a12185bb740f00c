/* Copyright 2026 The Matchstack Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the matchstack library.
 *
 * Conventions:
 *   - Every function returns an ms_status; results go through out parameters.
 *   - Out parameters are written only on MS_OK.  On failure ms_last_error()
 *     returns a message for the calling thread, valid until its next API call.
 *   - Strings returned through char** are NUL-terminated, heap-allocated, and
 *     owned by the caller; release them with ms_string_free.
 *   - Counts that can exceed 64 bits travel as decimal strings.
 *   - Growth histories travel as JSON arrays of face indices, e.g. "[0,2,4]".
 *     Choice i must be smaller than 2i+1, the number of inner faces after i
 *     growth steps.
 *   - Handles are opaque; each ms_*_new/ms_*_parse pairs with ms_*_free.
 *     NULL is safe to pass to every free function.
 *
 * Handles are not thread-safe; treat each as confined to one thread at a
 * time.  Distinct handles never share mutable state.
 */

#ifndef MATCHSTACK_H_
#define MATCHSTACK_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ms_status {
  MS_OK = 0,
  MS_ERR_INVALID_ARGUMENT = 1, /* NULL out pointer, malformed handle use */
  MS_ERR_INDEX_RANGE = 2,      /* growth choice outside the face list */
  MS_ERR_PARSE = 3,            /* malformed JSON or decimal string */
  MS_ERR_INVALID_TREE = 4,     /* label outside 1..3, duplicate sibling label */
  MS_ERR_PRECONDITION = 5,     /* operation outside its stated domain */
  MS_ERR_TOO_LARGE = 6,        /* brute-force guard refused the instance */
  MS_ERR_UNKNOWN_NAME = 7,     /* unknown suite/format name */
  MS_ERR_NOMEM = 8,
  MS_ERR_INTERNAL = 9
} ms_status;

/* Library version, static storage. */
const char* ms_version(void);

/* Message for the last failing call on this thread; never NULL. */
const char* ms_last_error(void);

void ms_string_free(char* s);

typedef struct ms_triangulation ms_triangulation;
typedef struct ms_tree ms_tree;
typedef struct ms_dual ms_dual;
typedef struct ms_history_iter ms_history_iter;

/* ---- growth histories ------------------------------------------------- */

/* Number of histories of the given length, (2n-1)!!, as a decimal string. */
ms_status ms_history_count(size_t length, char** out_decimal);

/* Iterate all histories of one length in lexicographic order. */
ms_status ms_history_iter_new(size_t length, ms_history_iter** out);
/* Writes the next history as JSON, or NULL when exhausted. */
ms_status ms_history_iter_next(ms_history_iter* it, char** out_json);
void ms_history_iter_free(ms_history_iter* it);

/* Uniform history of the given length, reproducible from the seed. */
ms_status ms_random_history(size_t length, uint64_t seed, char** out_json);

/* ---- triangulations ---------------------------------------------------- */

ms_status ms_triangulation_from_history(const char* history_json,
                                        ms_triangulation** out);
void ms_triangulation_free(ms_triangulation* t);

ms_status ms_triangulation_vertex_count(const ms_triangulation* t, size_t* out);
ms_status ms_triangulation_inner_face_count(const ms_triangulation* t,
                                            size_t* out);
ms_status ms_triangulation_edge_count(const ms_triangulation* t, size_t* out);
ms_status ms_triangulation_to_json(const ms_triangulation* t, char** out_json);

/* Spin-glass degeneracy computed by the transfer recursion (exact, fast). */
ms_status ms_degeneracy(const ms_triangulation* t, char** out_decimal);
/* The four class counts as a JSON array of decimal strings. */
ms_status ms_degeneracy_vector(const ms_triangulation* t, char** out_json);

/* Brute-force ground-state count; MS_ERR_TOO_LARGE beyond 30 vertices. */
ms_status ms_count_groundstates(const ms_triangulation* t, char** out_decimal);
/* Backtracking count of one-per-face edge sets; guard at 45 edges. */
ms_status ms_count_intersecting_sets(const ms_triangulation* t,
                                     char** out_decimal);

/* ---- colored trees ------------------------------------------------------ */

/* Tree of a triangulation with at least one growth step (the base triangle
 * has no tree: MS_ERR_PRECONDITION). */
ms_status ms_triangulation_tree(const ms_triangulation* t, ms_tree** out);
/* Parse {"label":null,"children":[...]}; children are sorted by label. */
ms_status ms_tree_parse(const char* json, ms_tree** out);
void ms_tree_free(ms_tree* t);

ms_status ms_tree_size(const ms_tree* t, size_t* out);
ms_status ms_tree_to_json(const ms_tree* t, char** out_json);
ms_status ms_tree_to_dot(const ms_tree* t, char** out_dot);
/* The lexicographically determined history that reproduces this tree. */
ms_status ms_tree_history(const ms_tree* t, char** out_json);
/* Class-count vector of any triangulation mapping to this tree. */
ms_status ms_tree_root_vector(const ms_tree* t, char** out_json);

/* ---- dual graphs -------------------------------------------------------- */

ms_status ms_triangulation_dual(const ms_triangulation* t, ms_dual** out);
void ms_dual_free(ms_dual* d);

ms_status ms_dual_vertex_count(const ms_dual* d, size_t* out);
ms_status ms_dual_edge_count(const ms_dual* d, size_t* out);
ms_status ms_dual_to_json(const ms_dual* d, char** out_json);
ms_status ms_dual_to_dot(const ms_dual* d, char** out_dot);
/* Exact perfect-matching count; MS_ERR_TOO_LARGE beyond 40 vertices. */
ms_status ms_dual_perfect_matchings(const ms_dual* d, char** out_decimal);

/* ---- exact golden-ratio bounds ------------------------------------------ */

/* Decides phi^exponent <= x without floating point; x is a nonnegative
 * decimal string. */
ms_status ms_golden_power_leq(size_t exponent, const char* x_decimal,
                              int* out_leq);
/* degeneracy >= 6 * phi^((size + 3) / denominator)?  Pass denominator 36 for
 * the published exponent. */
ms_status ms_theorem_bound_check(size_t triangulation_size,
                                 const char* degeneracy_decimal,
                                 unsigned denominator, int* out_holds);
/* matchings >= 3 * phi^(size / denominator)?  Published denominator: 72. */
ms_status ms_corollary_bound_check(size_t dual_size,
                                   const char* matchings_decimal,
                                   unsigned denominator, int* out_holds);

/* ---- composite operations ----------------------------------------------- */

/* Full analysis of one history: triangulation statistics, tree, class-count
 * vector, degeneracy, matching count of the dual, and exact bound verdicts,
 * as one JSON object. */
ms_status ms_analyze(const char* history_json, char** out_json);

/* One of "tri", "tree", "dual" rendered as "json" or "dot" ("tri" supports
 * only "json"). */
ms_status ms_export(const char* history_json, const char* what,
                    const char* format, char** out);

/* Receives one JSON line per checked instance; called on unspecified threads
 * but never concurrently. */
typedef void (*ms_report_sink)(const char* json_line, void* user_data);

/* Run a verification suite ("lemma1", "prop2", "remainders", "small-props",
 * "main-lemma", "theorem", "corollary", or "all").  allow_below whitelists
 * bound violations on instances smaller than the given size.  The summary is
 * a JSON array with one report object per suite; sink may be NULL. */
ms_status ms_verify(const char* suite, size_t max_n, size_t allow_below,
                    ms_report_sink sink, void* user_data,
                    char** out_summary_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MATCHSTACK_H_ */
