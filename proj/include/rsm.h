/* Copyright 2026 The Authors.
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

/* C interface to the rough-set / matroid kernel.
 *
 * Handles are opaque; every fallible call returns a status code. On any
 * nonzero status, rsm_last_error() returns a human-readable message for the
 * calling thread, valid until the next rsm_* call on that thread.
 *
 * Subsets travel as uint32_t bitmasks: bit i is element i of the owning
 * universe, in file order. Universes hold at most 24 elements.
 *
 * Report functions produce deterministic line-oriented text. They set
 * *out_report on RSM_OK, RSM_CHECK_FAILED and RSM_ERR_THEOREM_VIOLATION
 * (the report then carries the failure), and leave it NULL on input errors.
 * Free reports with rsm_text_free().
 */

#ifndef RSM_H
#define RSM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RSM_OK 0
#define RSM_CHECK_FAILED 1            /* computation fine, a check failed */
#define RSM_ERR_BAD_ARGUMENT 2
#define RSM_ERR_PARSE 3
#define RSM_ERR_UNKNOWN_ELEMENT 4
#define RSM_ERR_UNIVERSE_MISMATCH 5
#define RSM_ERR_CAP_EXCEEDED 6
#define RSM_ERR_IO 7
#define RSM_ERR_AXIOM_FAILURE 8       /* input family violates an axiom */
#define RSM_ERR_THEOREM_VIOLATION 9   /* internal cross-check disagreed */
#define RSM_ERR_INTERNAL 10

/* Default and maximum bound on |U| for subset-enumerating operations.
 * Passing cap = 0 selects the default. */
#define RSM_DEFAULT_CAP 20
#define RSM_MAX_CAP 24

typedef struct rsm_partition rsm_partition;
typedef struct rsm_family rsm_family;

const char* rsm_version(void);
const char* rsm_status_name(int status);

/* Message describing the last failure on this thread. Never NULL. */
const char* rsm_last_error(void);

/* ---- partitions (equivalence relations) ---- */

/* Partition file format: one block per line, elements whitespace separated,
 * '#' lines ignored; the universe is the union of listed elements in
 * first-appearance order. */
int rsm_partition_parse(const char* text, rsm_partition** out);
int rsm_partition_parse_file(const char* path, rsm_partition** out);
void rsm_partition_free(rsm_partition* p);

int rsm_partition_universe_size(const rsm_partition* p);
int rsm_partition_block_count(const rsm_partition* p);
/* Label of element `index`; NULL if out of range. Owned by the handle. */
const char* rsm_partition_label(const rsm_partition* p, int index);

/* Equivalence class of a labelled element. */
int rsm_partition_block_of(const rsm_partition* p, const char* label,
                           uint32_t* out_block);
int rsm_partition_lower(const rsm_partition* p, uint32_t set, uint32_t* out);
int rsm_partition_upper(const rsm_partition* p, uint32_t set, uint32_t* out);
/* 1 if lower and upper approximations coincide, else 0. */
int rsm_partition_is_precise(const rsm_partition* p, uint32_t set,
                             int* out_precise);
/* Rank in the induced matroid: number of blocks meeting the set. */
int rsm_partition_rank(const rsm_partition* p, uint32_t set, int* out_rank);

/* ---- set families ---- */

/* Family file format: one set per line, elements whitespace separated, a
 * sole '-' for the empty set, '#' lines ignored; the universe is the union
 * of listed elements in first-appearance order. */
int rsm_family_parse(const char* text, rsm_family** out);
int rsm_family_parse_file(const char* path, rsm_family** out);
void rsm_family_free(rsm_family* f);

int rsm_family_size(const rsm_family* f);
int rsm_family_universe_size(const rsm_family* f);
/* Member i (in ascending mask order). */
int rsm_family_member(const rsm_family* f, int index, uint32_t* out_mask);
/* Serializes back to the family file format. Free with rsm_text_free. */
int rsm_family_emit(const rsm_family* f, char** out_text);

/* One derived family of the matroid induced by a partition. `which` is one
 * of 'S' (supports), 'B' (bases), 'I' (independents), 'H' (hyperplanes),
 * 'L' (closed sets). */
int rsm_induced_family(const rsm_partition* p, char which, int cap,
                       rsm_family** out);

/* ---- reports ---- */

/* Lower/upper approximations and the precise/rough verdict of one set,
 * given in the family file format over the partition's universe. */
int rsm_report_approx(const rsm_partition* p, const char* set_text,
                      char** out_report);

/* Support sets, bases, independents, hyperplanes, closed sets and r(U) of
 * the induced matroid. */
int rsm_report_induce(const rsm_partition* p, int cap, char** out_report);

/* Axiom reports: independence (I1-I3), support (S1-S3), closed-set
 * (F1-F3). RSM_CHECK_FAILED when any axiom fails. */
int rsm_report_check_independence(const rsm_family* f, char** out_report);
int rsm_report_check_supports(const rsm_family* f, int cap,
                              char** out_report);
int rsm_report_check_closed(const rsm_family* f, int cap, char** out_report);

/* Differential validation of all induced structures against the
 * brute-force oracle. RSM_CHECK_FAILED when any diff is nonempty. */
int rsm_report_verify(const rsm_partition* p, int cap, char** out_report);

/* Cross-validates every partition of an n-element universe, 1 <= n <= 7. */
int rsm_report_sweep(int n, char** out_report);

/* Support-family inclusion for the intersection of two equivalence
 * relations, with strictness witness. */
int rsm_report_intersect(const rsm_partition* p1, const rsm_partition* p2,
                         int cap, char** out_report);

/* Approximation-operator laws over all subset pairs (exhaustive != 0) or
 * over `sample_count` seeded samples. RSM_CHECK_FAILED when any law fails. */
int rsm_report_properties(const rsm_partition* p, int exhaustive,
                          int sample_count, uint64_t seed, int cap,
                          char** out_report);

void rsm_text_free(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RSM_H */
