#include "margin_mcmc.h"

#include <cstring>
#include <memory>
#include <string>

#include "core/binary_matrix.hpp"
#include "core/chains.hpp"
#include "core/datasets.hpp"
#include "core/enumeration.hpp"
#include "core/error.hpp"
#include "core/feasibility.hpp"
#include "core/kernels.hpp"
#include "core/statistics.hpp"
#include "core/text_io.hpp"

using namespace margin_mcmc;

struct mm_matrix {
    BinaryMatrix value;
};

struct mm_space {
    std::shared_ptr<const StateSpace> value;
};

struct mm_kernel {
    std::unique_ptr<TransitionMatrix> value;
};

struct mm_chain {
    std::unique_ptr<Chain> value;
};

struct mm_trace {
    StatTrace value;
};

namespace {

thread_local std::string g_last_error;

mm_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_argument: return MM_ERR_INVALID;
        case ErrorCode::parse: return MM_ERR_PARSE;
        case ErrorCode::limit: return MM_ERR_LIMIT;
        case ErrorCode::io: return MM_ERR_IO;
        case ErrorCode::internal: return MM_ERR_INTERNAL;
    }
    return MM_ERR_INTERNAL;
}

mm_status fail(mm_status status, const char* message) {
    g_last_error = message;
    return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
mm_status guarded(Fn&& body) {
    try {
        body();
        g_last_error.clear();
        return MM_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return MM_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Algorithm to_algorithm(mm_algorithm a) {
    switch (a) {
        case MM_ALGORITHM_SWAP: return Algorithm::swap;
        case MM_ALGORITHM_CURVEBALL: return Algorithm::curveball;
        case MM_ALGORITHM_RECTANGLE_LOOP: return Algorithm::rectangle_loop;
    }
    throw Error(ErrorCode::invalid_argument, "unknown algorithm id");
}

Margins margins_from(const int32_t* row_sums, int32_t rows, const int32_t* col_sums,
                     int32_t cols) {
    if (!row_sums || !col_sums || rows < 0 || cols < 0) {
        throw Error(ErrorCode::invalid_argument, "margin arrays must be non-null");
    }
    return {std::vector<int>(row_sums, row_sums + rows),
            std::vector<int>(col_sums, col_sums + cols)};
}

}  // namespace

extern "C" {

const char* mm_version(void) { return "1.0.0"; }

const char* mm_last_error(void) { return g_last_error.c_str(); }

void mm_string_free(char* s) { delete[] s; }

/* ---- matrices ---- */

mm_status mm_matrix_from_grid(int32_t rows, int32_t cols, const uint8_t* cells,
                              mm_matrix** out) {
    if (!out) return fail(MM_ERR_INVALID, "out must be non-null");
    if (!cells) return fail(MM_ERR_INVALID, "cells must be non-null");
    return guarded([&] {
        std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
        for (int32_t i = 0; i < rows; ++i) {
            for (int32_t j = 0; j < cols; ++j) {
                grid[i][j] = cells[static_cast<std::size_t>(i) * cols + j];
            }
        }
        *out = new mm_matrix{BinaryMatrix::from_grid(grid)};
    });
}

mm_status mm_matrix_parse(const char* text, mm_matrix** out) {
    if (!out || !text) return fail(MM_ERR_INVALID, "text and out must be non-null");
    return guarded([&] { *out = new mm_matrix{parse_matrix(text)}; });
}

mm_status mm_matrix_read_file(const char* path, mm_matrix** out) {
    if (!out || !path) return fail(MM_ERR_INVALID, "path and out must be non-null");
    return guarded([&] { *out = new mm_matrix{read_matrix_file(path)}; });
}

mm_status mm_matrix_builtin(const char* name, mm_matrix** out) {
    if (!out || !name) return fail(MM_ERR_INVALID, "name and out must be non-null");
    return guarded([&] {
        std::string key(name);
        if (key != "finch") {
            throw Error(ErrorCode::invalid_argument,
                        "unknown builtin dataset '" + key + "' (available: finch)");
        }
        *out = new mm_matrix{finch_dataset()};
    });
}

mm_status mm_matrix_random(int32_t rows, int32_t cols, double fill, uint64_t seed,
                           uint64_t stream, mm_matrix** out) {
    if (!out) return fail(MM_ERR_INVALID, "out must be non-null");
    return guarded([&] {
        RngStream rng(seed, stream);
        *out = new mm_matrix{random_bernoulli(rows, cols, fill, rng)};
    });
}

mm_status mm_matrix_strip_degenerate(const mm_matrix* m, mm_matrix** out) {
    if (!out || !m) return fail(MM_ERR_INVALID, "matrix and out must be non-null");
    return guarded([&] { *out = new mm_matrix{strip_degenerate(m->value).reduced}; });
}

void mm_matrix_free(mm_matrix* m) { delete m; }

int32_t mm_matrix_rows(const mm_matrix* m) { return m ? m->value.rows() : 0; }

int32_t mm_matrix_cols(const mm_matrix* m) { return m ? m->value.cols() : 0; }

int32_t mm_matrix_get(const mm_matrix* m, int32_t i, int32_t j) {
    if (!m || i < 0 || i >= m->value.rows() || j < 0 || j >= m->value.cols()) return -1;
    return m->value.get(i, j) ? 1 : 0;
}

mm_status mm_matrix_margins(const mm_matrix* m, int32_t* row_sums, int32_t* col_sums) {
    if (!m) return fail(MM_ERR_INVALID, "matrix must be non-null");
    if (row_sums) {
        for (int i = 0; i < m->value.rows(); ++i) row_sums[i] = m->value.row_sums()[i];
    }
    if (col_sums) {
        for (int j = 0; j < m->value.cols(); ++j) col_sums[j] = m->value.col_sums()[j];
    }
    return MM_OK;
}

mm_status mm_matrix_text(const mm_matrix* m, char** out) {
    if (!m || !out) return fail(MM_ERR_INVALID, "matrix and out must be non-null");
    return guarded([&] { *out = copy_string(format_matrix(m->value)); });
}

mm_status mm_matrix_key(const mm_matrix* m, char** out) {
    if (!m || !out) return fail(MM_ERR_INVALID, "matrix and out must be non-null");
    return guarded([&] { *out = copy_string(m->value.key()); });
}

/* ---- feasibility / enumeration ---- */

int32_t mm_gale_ryser_feasible(const int32_t* row_sums, int32_t rows,
                               const int32_t* col_sums, int32_t cols) {
    try {
        return gale_ryser_feasible(margins_from(row_sums, rows, col_sums, cols)) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

mm_status mm_space_enumerate(const int32_t* row_sums, int32_t rows,
                             const int32_t* col_sums, int32_t cols, int64_t cap,
                             mm_space** out) {
    if (!out) return fail(MM_ERR_INVALID, "out must be non-null");
    return guarded([&] {
        Margins margins = margins_from(row_sums, rows, col_sums, cols);
        std::size_t limit = cap <= 0 ? kDefaultStateCap : static_cast<std::size_t>(cap);
        *out = new mm_space{
            std::make_shared<const StateSpace>(enumerate_state_space(margins, limit))};
    });
}

int64_t mm_space_size(const mm_space* s) {
    return s ? static_cast<int64_t>(s->value->size()) : 0;
}

mm_status mm_space_state(const mm_space* s, int64_t index, mm_matrix** out) {
    if (!s || !out) return fail(MM_ERR_INVALID, "space and out must be non-null");
    if (index < 0 || index >= static_cast<int64_t>(s->value->size())) {
        return fail(MM_ERR_INVALID, "state index out of range");
    }
    return guarded([&] {
        *out = new mm_matrix{s->value->states[static_cast<std::size_t>(index)]};
    });
}

int64_t mm_space_index_of(const mm_space* s, const mm_matrix* m) {
    if (!s || !m) return -1;
    std::size_t pos = s->value->find(m->value);
    return pos == StateSpace::npos ? -1 : static_cast<int64_t>(pos);
}

void mm_space_free(mm_space* s) { delete s; }

/* ---- kernels ---- */

mm_status mm_kernel_build(const mm_space* s, mm_algorithm algorithm, mm_kernel** out) {
    if (!s || !out) return fail(MM_ERR_INVALID, "space and out must be non-null");
    return guarded([&] {
        *out = new mm_kernel{std::make_unique<TransitionMatrix>(
            build_kernel(s->value, to_algorithm(algorithm)))};
    });
}

int64_t mm_kernel_size(const mm_kernel* k) {
    return k ? static_cast<int64_t>(k->value->size()) : 0;
}

mm_status mm_kernel_entry(const mm_kernel* k, int64_t i, int64_t j, int64_t* num,
                          int64_t* den) {
    if (!k || !num || !den) return fail(MM_ERR_INVALID, "kernel and outputs must be non-null");
    int64_t n = static_cast<int64_t>(k->value->size());
    if (i < 0 || i >= n || j < 0 || j >= n) {
        return fail(MM_ERR_INVALID, "kernel index out of range");
    }
    const Rational& p = k->value->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    *num = p.num();
    *den = p.den();
    return MM_OK;
}

void mm_kernel_free(mm_kernel* k) { delete k; }

mm_status mm_rectangle_pair_probability(const mm_matrix* a, const mm_matrix* b,
                                        int64_t* num, int64_t* den) {
    if (!a || !b || !num || !den) {
        return fail(MM_ERR_INVALID, "matrices and outputs must be non-null");
    }
    return guarded([&] {
        Rational p = rectangle_pair_probability(a->value, b->value);
        *num = p.num();
        *den = p.den();
    });
}

mm_status mm_kernel_stationarity_residual(const mm_kernel* k, int64_t* num, int64_t* den) {
    if (!k || !num || !den) return fail(MM_ERR_INVALID, "kernel and outputs must be non-null");
    return guarded([&] {
        StationarityResult r = check_stationarity(*k->value);
        *num = r.max_residual.num();
        *den = r.max_residual.den();
    });
}

mm_status mm_kernel_is_symmetric(const mm_kernel* k, int32_t* out) {
    if (!k || !out) return fail(MM_ERR_INVALID, "kernel and out must be non-null");
    return guarded([&] { *out = is_symmetric(*k->value) ? 1 : 0; });
}

mm_status mm_kernel_dominates(const mm_kernel* first, const mm_kernel* second,
                              int32_t* out, int64_t* witness_i, int64_t* witness_j) {
    if (!first || !second || !out) {
        return fail(MM_ERR_INVALID, "kernels and out must be non-null");
    }
    return guarded([&] {
        DominanceResult r = check_peskun_dominance(*first->value, *second->value);
        *out = r.dominates ? 1 : 0;
        if (!r.dominates && r.witness) {
            if (witness_i) *witness_i = static_cast<int64_t>(r.witness->first);
            if (witness_j) *witness_j = static_cast<int64_t>(r.witness->second);
        }
    });
}

mm_status mm_kernel_tv_curve(const mm_kernel* k, int32_t k_max, double* out) {
    if (!k || !out) return fail(MM_ERR_INVALID, "kernel and out must be non-null");
    return guarded([&] {
        std::vector<double> curve = tv_distance_curve(*k->value, k_max);
        for (std::size_t i = 0; i < curve.size(); ++i) out[i] = curve[i];
    });
}

/* ---- chains ---- */

mm_status mm_chain_create(const mm_matrix* start, mm_algorithm algorithm,
                          uint64_t seed, uint64_t stream, mm_chain** out) {
    if (!start || !out) return fail(MM_ERR_INVALID, "start and out must be non-null");
    return guarded([&] {
        *out = new mm_chain{std::make_unique<Chain>(start->value, to_algorithm(algorithm),
                                                    RngStream(seed, stream))};
    });
}

mm_status mm_chain_step(mm_chain* c, int64_t steps) {
    if (!c) return fail(MM_ERR_INVALID, "chain must be non-null");
    if (steps < 0) return fail(MM_ERR_INVALID, "steps must be non-negative");
    return guarded([&] { c->value->run(static_cast<std::uint64_t>(steps)); });
}

uint64_t mm_chain_iterations(const mm_chain* c) { return c ? c->value->iterations() : 0; }

uint64_t mm_chain_swaps(const mm_chain* c) { return c ? c->value->successful_swaps() : 0; }

mm_status mm_chain_snapshot(const mm_chain* c, mm_matrix** out) {
    if (!c || !out) return fail(MM_ERR_INVALID, "chain and out must be non-null");
    return guarded([&] { *out = new mm_matrix{c->value->snapshot()}; });
}

void mm_chain_free(mm_chain* c) { delete c; }

/* ---- statistics ---- */

mm_status mm_s_bar_squared(const mm_matrix* m, double* out) {
    if (!m || !out) return fail(MM_ERR_INVALID, "matrix and out must be non-null");
    return guarded([&] { *out = s_bar_squared(m->value); });
}

mm_status mm_perturbation_score(const mm_matrix* current, const mm_matrix* initial,
                                double* out) {
    if (!current || !initial || !out) {
        return fail(MM_ERR_INVALID, "matrices and out must be non-null");
    }
    return guarded([&] { *out = perturbation_score(current->value, initial->value); });
}

mm_status mm_trace_create(mm_trace** out) {
    if (!out) return fail(MM_ERR_INVALID, "out must be non-null");
    return guarded([&] { *out = new mm_trace{}; });
}

mm_status mm_trace_add(mm_trace* t, uint64_t iteration, double value) {
    if (!t) return fail(MM_ERR_INVALID, "trace must be non-null");
    return guarded([&] { t->value.add(iteration, value); });
}

int64_t mm_trace_size(const mm_trace* t) {
    return t ? static_cast<int64_t>(t->value.size()) : 0;
}

double mm_trace_mean(const mm_trace* t) { return t ? t->value.mean() : 0.0; }

double mm_trace_stddev(const mm_trace* t) { return t ? t->value.stddev() : 0.0; }

void mm_trace_free(mm_trace* t) { delete t; }

}  // extern "C"
