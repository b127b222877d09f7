#include "core/chains.hpp"

#include <algorithm>
#include <cassert>

#include "core/error.hpp"

namespace margin_mcmc {

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "swap") return Algorithm::swap;
    if (name == "curveball") return Algorithm::curveball;
    if (name == "rectangle-loop") return Algorithm::rectangle_loop;
    throw Error(ErrorCode::invalid_argument,
                "unknown algorithm '" + name +
                    "' (valid: swap, curveball, rectangle-loop)");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::swap: return "swap";
        case Algorithm::curveball: return "curveball";
        case Algorithm::rectangle_loop: return "rectangle-loop";
    }
    throw Error(ErrorCode::internal, "unhandled algorithm");
}

void swap_step(ChainState& state, RngStream& rng) {
    BinaryMatrix& a = state.matrix;
    if (a.rows() < 2 || a.cols() < 2) {
        throw Error(ErrorCode::invalid_argument,
                    "swap step needs at least two rows and two columns");
    }
    auto [r1, r2] = rng.distinct_pair(a.rows());
    auto [c1, c2] = rng.distinct_pair(a.cols());
    SwapQuad q{r1, r2, c1, c2};
    if (a.is_checkerboard(q)) {
        a.apply_swap(q);
        ++state.successful_swaps;
    }
    ++state.iteration;
}

namespace {

// Uniform size-k subset of `pool`, returned sorted.
std::vector<int> sample_subset(const std::vector<int>& pool, int k, RngStream& rng) {
    std::vector<int> scratch = pool;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(rng.below(scratch.size() - i));
        std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(k);
    std::sort(scratch.begin(), scratch.end());
    return scratch;
}

}  // namespace

void curveball_step(ChainState& state, RngStream& rng) {
    BinaryMatrix& m = state.matrix;
    if (m.rows() < 2) {
        throw Error(ErrorCode::invalid_argument, "curveball step needs at least two rows");
    }
    auto [a, b] = rng.distinct_pair(m.rows());

    std::vector<int> only_a, only_b;  // exclusive 1-columns of each row
    for (int j = 0; j < m.cols(); ++j) {
        bool in_a = m.get(a, j), in_b = m.get(b, j);
        if (in_a && !in_b) only_a.push_back(j);
        if (in_b && !in_a) only_b.push_back(j);
    }
    if (only_a.empty() || only_b.empty()) {
        // The current split is the only subset of its size: identity trade.
        ++state.iteration;
        return;
    }

    std::vector<int> pool;
    pool.reserve(only_a.size() + only_b.size());
    std::merge(only_a.begin(), only_a.end(), only_b.begin(), only_b.end(),
               std::back_inserter(pool));

    // New exclusive set for row a, uniform among the size-|only_a| subsets of
    // the pool other than the current one.
    std::vector<int> selected;
    do {
        selected = sample_subset(pool, static_cast<int>(only_a.size()), rng);
    } while (selected == only_a);

    std::uint64_t moved = 0;
    std::size_t cursor = 0;
    for (int j : pool) {
        bool want_a = cursor < selected.size() && selected[cursor] == j;
        if (want_a) ++cursor;
        if (m.get(a, j) != want_a) {
            m.set(a, j, want_a);
            m.set(b, j, !want_a);
            ++moved;
        }
    }
    assert(moved > 0);
    ++state.successful_swaps;
    state.traded_columns += moved;
    ++state.iteration;
}

void rectangle_loop_step(ChainState& state, RngStream& rng) {
    BinaryMatrix& m = state.matrix;
    if (m.rows() < 1 || m.cols() < 1) {
        throw Error(ErrorCode::invalid_argument, "rectangle loop step on an empty matrix");
    }
    int r1 = rng.index(m.rows());
    int c1 = rng.index(m.cols());
    int r2, c2;
    if (m.get(r1, c1)) {
        int zeros = m.cols() - m.row_sums()[r1];
        if (zeros == 0) {
            throw Error(ErrorCode::invalid_argument,
                        "row " + std::to_string(r1) + " has no zero entry; strip degenerate rows first");
        }
        c2 = m.kth_zero_in_row(r1, static_cast<int>(rng.below(zeros)));
        int ones = m.col_sums()[c2];
        if (ones == 0) {
            throw Error(ErrorCode::invalid_argument,
                        "column " + std::to_string(c2) + " has no one entry; strip degenerate columns first");
        }
        r2 = m.kth_one_in_col(c2, static_cast<int>(rng.below(ones)));
    } else {
        int ones = m.col_sums()[c1];
        if (ones == 0) {
            throw Error(ErrorCode::invalid_argument,
                        "column " + std::to_string(c1) + " has no one entry; strip degenerate columns first");
        }
        r2 = m.kth_one_in_col(c1, static_cast<int>(rng.below(ones)));
        int zeros = m.cols() - m.row_sums()[r2];
        if (zeros == 0) {
            throw Error(ErrorCode::invalid_argument,
                        "row " + std::to_string(r2) + " has no zero entry; strip degenerate rows first");
        }
        c2 = m.kth_zero_in_row(r2, static_cast<int>(rng.below(zeros)));
    }
    // The walk can never revisit its own row or column.
    assert(r2 != r1 && c2 != c1);
    SwapQuad q{r1, r2, c1, c2};
    if (m.is_checkerboard(q)) {
        m.apply_swap(q);
        ++state.successful_swaps;
    }
    ++state.iteration;
}

void step(ChainState& state, RngStream& rng) {
    switch (state.algorithm) {
        case Algorithm::swap: swap_step(state, rng); return;
        case Algorithm::curveball: curveball_step(state, rng); return;
        case Algorithm::rectangle_loop: rectangle_loop_step(state, rng); return;
    }
    throw Error(ErrorCode::internal, "unhandled algorithm");
}

Chain::Chain(const BinaryMatrix& start, Algorithm algorithm, RngStream rng)
    : rng_(rng) {
    state_.algorithm = algorithm;
    if (algorithm == Algorithm::rectangle_loop) {
        StrippedMatrix stripped = strip_degenerate(start);
        if (stripped.info.anything_stripped()) {
            strip_ = stripped.info;
        }
        state_.matrix = std::move(stripped.reduced);
    } else {
        state_.matrix = start;
    }
}

void Chain::step_once() {
    if (state_.matrix.empty()) {
        // Fully degenerate instance: the state space is a single matrix.
        ++state_.iteration;
        return;
    }
    step(state_, rng_);
}

void Chain::run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step_once();
}

BinaryMatrix Chain::snapshot() const {
    if (strip_) return reconstruct(state_.matrix, *strip_);
    return state_.matrix;
}

RunResult run_chain(const BinaryMatrix& start, Algorithm algorithm,
                    std::uint64_t iterations, RngStream rng, std::uint64_t thin,
                    std::uint64_t burn_in, const SampleObserver& observer) {
    if (thin == 0) {
        throw Error(ErrorCode::invalid_argument, "thin must be at least 1");
    }
    Chain chain(start, algorithm, rng);
    for (std::uint64_t t = 1; t <= iterations; ++t) {
        chain.step_once();
        if (observer && t > burn_in && (t - burn_in) % thin == 0) {
            observer(chain.snapshot(), t);
        }
    }
    RunResult result{chain.state()};
    if (algorithm == Algorithm::rectangle_loop) {
        result.final_state.matrix = chain.snapshot();
    }
    return result;
}

}  // namespace margin_mcmc
