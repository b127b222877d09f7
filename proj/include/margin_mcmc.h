/*
 * margin_mcmc: uniform sampling of binary matrices with fixed row and column
 * sums, plus exact analysis of the underlying Markov chains.
 *
 * Conventions:
 *   - Every fallible call returns an mm_status; MM_OK is 0. On failure,
 *     mm_last_error() describes the problem for the calling thread.
 *   - Objects are opaque handles created by mm_*_create/parse/build calls
 *     and released with the matching mm_*_free. Handles are not thread-safe;
 *     use one handle per thread.
 *   - Matrices use the text format "0 1 0\n1 0 1\n..." (one row per line,
 *     single spaces, no header).
 *   - Sampling is deterministic: identical (seed, stream) pairs reproduce
 *     identical results on every platform.
 */

#ifndef MARGIN_MCMC_H
#define MARGIN_MCMC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t mm_status;

enum {
    MM_OK = 0,
    MM_ERR_INVALID = 1,  /* bad argument or violated precondition */
    MM_ERR_PARSE = 2,    /* malformed matrix text */
    MM_ERR_LIMIT = 3,    /* enumeration cap exceeded */
    MM_ERR_IO = 4,       /* file system failure */
    MM_ERR_INTERNAL = 5  /* self-check failure; report a bug */
};

typedef enum {
    MM_ALGORITHM_SWAP = 0,
    MM_ALGORITHM_CURVEBALL = 1,
    MM_ALGORITHM_RECTANGLE_LOOP = 2
} mm_algorithm;

/* Library version, e.g. "1.0.0". */
const char* mm_version(void);

/* Message for the last failing call on this thread; empty string if none. */
const char* mm_last_error(void);

/* Releases strings returned through char** out-parameters. */
void mm_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Matrices                                                            */

typedef struct mm_matrix mm_matrix;

/* cells is row-major, one byte per cell, each 0 or 1. */
mm_status mm_matrix_from_grid(int32_t rows, int32_t cols, const uint8_t* cells,
                              mm_matrix** out);
mm_status mm_matrix_parse(const char* text, mm_matrix** out);
mm_status mm_matrix_read_file(const char* path, mm_matrix** out);
/* Built-in datasets; name "finch" is the 13x17 Darwin's finches matrix. */
mm_status mm_matrix_builtin(const char* name, mm_matrix** out);
/* I.i.d. Bernoulli(fill) cells. */
mm_status mm_matrix_random(int32_t rows, int32_t cols, double fill, uint64_t seed,
                           uint64_t stream, mm_matrix** out);
/* Removes rows/columns that are all 0 or all 1, to a fixed point. */
mm_status mm_matrix_strip_degenerate(const mm_matrix* m, mm_matrix** out);
void mm_matrix_free(mm_matrix* m);

int32_t mm_matrix_rows(const mm_matrix* m);
int32_t mm_matrix_cols(const mm_matrix* m);
/* Cell value 0/1, or -1 when the index is out of range. */
int32_t mm_matrix_get(const mm_matrix* m, int32_t i, int32_t j);
/* Buffers sized by the caller: rows entries and cols entries. Either may be
 * NULL to skip. */
mm_status mm_matrix_margins(const mm_matrix* m, int32_t* row_sums, int32_t* col_sums);
/* Matrix text format; free with mm_string_free. */
mm_status mm_matrix_text(const mm_matrix* m, char** out);
/* Row-major bit string, the canonical state key; free with mm_string_free. */
mm_status mm_matrix_key(const mm_matrix* m, char** out);

/* ------------------------------------------------------------------ */
/* Feasibility and enumeration                                         */

/* 1 when a binary matrix with the given margins exists, else 0. */
int32_t mm_gale_ryser_feasible(const int32_t* row_sums, int32_t rows,
                               const int32_t* col_sums, int32_t cols);

typedef struct mm_space mm_space;

/* Enumerates every matrix with the given margins, sorted by canonical key.
 * Infeasible margins give an empty space. More than `cap` states is
 * MM_ERR_LIMIT; cap <= 0 means the default of 100000. */
mm_status mm_space_enumerate(const int32_t* row_sums, int32_t rows,
                             const int32_t* col_sums, int32_t cols, int64_t cap,
                             mm_space** out);
int64_t mm_space_size(const mm_space* s);
mm_status mm_space_state(const mm_space* s, int64_t index, mm_matrix** out);
/* Position of the matrix in the space, or -1 when absent. */
int64_t mm_space_index_of(const mm_space* s, const mm_matrix* m);
void mm_space_free(mm_space* s);

/* ------------------------------------------------------------------ */
/* Exact transition kernels                                            */

typedef struct mm_kernel mm_kernel;

mm_status mm_kernel_build(const mm_space* s, mm_algorithm algorithm, mm_kernel** out);
int64_t mm_kernel_size(const mm_kernel* k);
/* Exact entry as a reduced fraction. */
mm_status mm_kernel_entry(const mm_kernel* k, int64_t i, int64_t j, int64_t* num,
                          int64_t* den);
void mm_kernel_free(mm_kernel* k);

/* Closed-form one-step Rectangle Loop probability between two matrices that
 * differ in exactly one checkerboard unit. */
mm_status mm_rectangle_pair_probability(const mm_matrix* a, const mm_matrix* b,
                                        int64_t* num, int64_t* den);

/* Exact max_j |(pi P - pi)_j| for uniform pi; zero means exactly stationary. */
mm_status mm_kernel_stationarity_residual(const mm_kernel* k, int64_t* num, int64_t* den);
/* 1 when P(i,j) == P(j,i) for all pairs. */
mm_status mm_kernel_is_symmetric(const mm_kernel* k, int32_t* out);
/* 1 when every off-diagonal entry of `first` is >= the entry of `second`
 * (exact comparison). On 0, witness_i and witness_j name the first violation
 * when non-NULL. */
mm_status mm_kernel_dominates(const mm_kernel* first, const mm_kernel* second,
                              int32_t* out, int64_t* witness_i, int64_t* witness_j);
/* out[k-1] = max-over-start total variation of P^k from uniform, k=1..k_max. */
mm_status mm_kernel_tv_curve(const mm_kernel* k, int32_t k_max, double* out);

/* ------------------------------------------------------------------ */
/* Chains                                                              */

typedef struct mm_chain mm_chain;

/* For MM_ALGORITHM_RECTANGLE_LOOP the chain runs on the degenerate-stripped
 * instance internally; snapshots are always full size. */
mm_status mm_chain_create(const mm_matrix* start, mm_algorithm algorithm,
                          uint64_t seed, uint64_t stream, mm_chain** out);
mm_status mm_chain_step(mm_chain* c, int64_t steps);
uint64_t mm_chain_iterations(const mm_chain* c);
uint64_t mm_chain_swaps(const mm_chain* c);
mm_status mm_chain_snapshot(const mm_chain* c, mm_matrix** out);
void mm_chain_free(mm_chain* c);

/* ------------------------------------------------------------------ */
/* Statistics                                                          */

/* Mean squared off-diagonal co-occurrence of the rows that contain both a 0
 * and a 1 (rows of constant value carry no signal and are excluded). */
mm_status mm_s_bar_squared(const mm_matrix* m, double* out);
/* Fraction of cells where `current` differs from `initial`. */
mm_status mm_perturbation_score(const mm_matrix* current, const mm_matrix* initial,
                                double* out);

/* Running mean / sample standard deviation over a sequence of values with
 * strictly increasing iteration labels. */
typedef struct mm_trace mm_trace;

mm_status mm_trace_create(mm_trace** out);
mm_status mm_trace_add(mm_trace* t, uint64_t iteration, double value);
int64_t mm_trace_size(const mm_trace* t);
double mm_trace_mean(const mm_trace* t);
double mm_trace_stddev(const mm_trace* t);
void mm_trace_free(mm_trace* t);

#ifdef __cplusplus
}
#endif

#endif /* MARGIN_MCMC_H */
