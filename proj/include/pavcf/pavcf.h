/* pavcf — exact pattern statistics over 132-avoiding permutations.
 *
 * C interface of the shared library. All functions return a status code;
 * on failure a thread-local message is available via pavcf_last_error().
 * Objects handed out as opaque pointers are owned by the caller and must be
 * released with the matching *_free / *_close function. Strings returned
 * through char** out-parameters are heap-allocated; release them with
 * pavcf_string_free().
 *
 * Passing 0 for a cap parameter selects the library default of 14 for
 * 132-avoider enumeration length.
 */
#ifndef PAVCF_H
#define PAVCF_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pavcf_status {
    PAVCF_OK = 0,
    PAVCF_ERR_INVALID_ARGUMENT = 1,
    PAVCF_ERR_LIMIT_EXCEEDED = 2,
    PAVCF_ERR_INTERNAL = 3
} pavcf_status;

const char* pavcf_status_name(pavcf_status status);

/* Message for the most recent failure on this thread; empty string if none. */
const char* pavcf_last_error(void);

void pavcf_string_free(char* s);

/* ---- patterns and permutations ----------------------------------------
 * Permutations are comma-separated one-line words ("3,5,4,2,1"), or compact
 * digits ("35421") when the length is at most 9; "" is the empty
 * permutation. Patterns use dash notation ("1-3-2", "23-1", "12").
 */

pavcf_status pavcf_count_occurrences(const char* pattern, const char* permutation, uint64_t* out);

/* *out = 1 when the permutation avoids the pattern, else 0. */
pavcf_status pavcf_avoids(const char* permutation, const char* pattern, int* out);

/* ---- 132-avoider enumeration ------------------------------------------ */

typedef struct pavcf_avoiders pavcf_avoiders;

pavcf_status pavcf_avoiders_open(uint32_t n, uint32_t cap, pavcf_avoiders** out);
/* Yields the next word into *word / *len (borrowed until the next call).
 * Returns 1 while a permutation was produced, 0 at the end. */
int pavcf_avoiders_next(pavcf_avoiders* it, const uint32_t** word, uint32_t* len);
void pavcf_avoiders_close(pavcf_avoiders* it);

pavcf_status pavcf_avoiders_count(uint32_t n, uint32_t cap, uint64_t* out);

/* ---- statistic distributions -------------------------------------------
 * Statistic specs: "a3", "e2", "f4" (single statistic), "e*" / "f*"
 * (aggregate total v_2 + v_3 + ...).
 */

pavcf_status pavcf_distribution_json(const char* stat, uint32_t n, uint32_t cap, char** out);
pavcf_status pavcf_distribution_csv(const char* stat, uint32_t n, uint32_t cap, char** out);

/* ---- statistic matrices -------------------------------------------------
 * JSON documents {"rows": R, "cols": K, "entries": [[i, j, value], ...]},
 * 1-based indices. Column k of a matrix drives the variable q_{k+1}; the
 * grading variable q1 always records the permutation length. Row i drives
 * the statistic a_i for family a and e_{i+1} / f_{i+1} for families e / f.
 */

typedef struct pavcf_matrix pavcf_matrix;

pavcf_status pavcf_matrix_parse(const char* json_text, pavcf_matrix** out);
pavcf_status pavcf_matrix_identity(uint32_t n, pavcf_matrix** out);
void pavcf_matrix_free(pavcf_matrix* m);

/* ---- series --------------------------------------------------------------
 * Graded series are serialized as a JSON list with one element per grade:
 * {"grade": d, "terms": [{"exponents": {"q2": 1, ...},
 *                         "coefficient": "<decimal>"}]}.
 */

typedef struct pavcf_series pavcf_series;

/* Expands the continued fraction of family 'C', 'D' or 'E' attached to the
 * binomial transform of the given statistic matrix, truncated at q1-degree
 * tdeg. depth <= 0 selects the self-checked automatic depth; a positive
 * depth evaluates at exactly that depth. */
pavcf_status pavcf_cf_expand(char family, const pavcf_matrix* matrix, uint32_t tdeg, int32_t depth,
                             pavcf_series** out);

/* Sums weight monomials of every 132-avoider of length <= tdeg for family
 * 'a', 'e' or 'f'; the brute-force counterpart of pavcf_cf_expand. */
pavcf_status pavcf_gf_enumerate(char family, const pavcf_matrix* matrix, uint32_t tdeg, uint32_t cap,
                                pavcf_series** out);

pavcf_status pavcf_series_to_json(const pavcf_series* s, char** out);
pavcf_status pavcf_series_equal(const pavcf_series* a, const pavcf_series* b, int* out);
void pavcf_series_free(pavcf_series* s);

/* ---- verification --------------------------------------------------------
 * Check ids: bcs1, cc, dd, bcs2, mm-forward, mm-inverse, narayana-e,
 * narayana-f, narayana-funceq, incr2-e, incr2-f, catalan-c1, catalan-c2,
 * fastpath, recursion-delta — or "all".
 */

typedef struct pavcf_verify_options {
    int32_t n;      /* length bound; -1 = per-check default   */
    int32_t tdeg;   /* series truncation; -1 = default        */
    int32_t trials; /* random battery size; -1 = default      */
    int64_t seed;   /* PRNG seed (mt19937_64); default 42     */
} pavcf_verify_options;

void pavcf_verify_options_init(pavcf_verify_options* opts);

/* Runs one check or all of them. text_format nonzero renders the human
 * report, zero the canonical JSON report. A check that runs to completion
 * and finds a counterexample is not an error: the status stays PAVCF_OK,
 * *all_passed becomes 0 and the report carries the counterexample. */
pavcf_status pavcf_verify_run(const char* check_id, const pavcf_verify_options* opts,
                              int text_format, char** out_report, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PAVCF_H */
