#ifndef MARGIN_MCMC_CHAINS_HPP
#define MARGIN_MCMC_CHAINS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "core/binary_matrix.hpp"
#include "core/feasibility.hpp"
#include "core/rng.hpp"

namespace margin_mcmc {

enum class Algorithm { swap, curveball, rectangle_loop };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

struct ChainState {
    BinaryMatrix matrix;
    Algorithm algorithm = Algorithm::swap;
    std::uint64_t iteration = 0;
    std::uint64_t successful_swaps = 0;
    // Curveball only: cumulative count of columns moved by accepted trades.
    std::uint64_t traded_columns = 0;
};

// One step each. Margins are invariant under every step; `iteration` always
// advances by one and `successful_swaps` advances when the matrix changed.

// Two distinct rows and two distinct columns uniformly at random; swap the
// 2x2 submatrix when it is a checkerboard unit, otherwise keep the state.
void swap_step(ChainState& state, RngStream& rng);

// Two distinct rows uniformly at random; their exclusive 1-columns form the
// trade pool. Row a receives a uniformly drawn replacement for its exclusive
// set among the equal-sized subsets of the pool other than the current one
// (when the current one is the only such subset the state is kept), row b
// receives the complement; shared and outside columns are untouched.
void curveball_step(ChainState& state, RngStream& rng);

// A cell (r1,c1) uniformly at random; from a 1, walk to a uniform 0 in its
// row and then a uniform 1 in that column; from a 0, walk to a uniform 1 in
// its column and then a uniform 0 in that row. Swap the resulting rectangle
// when it is a checkerboard unit. Requires every row and column to have both
// a 0 and a 1 (strip degenerate lines first); an empty candidate set is an
// error naming the degenerate line.
void rectangle_loop_step(ChainState& state, RngStream& rng);

void step(ChainState& state, RngStream& rng);

// Chain runner. Rectangle Loop runs on the degenerate-stripped instance and
// snapshots are reconstructed to full size; the other chains run on the
// matrix as given. A chain is single-threaded; run several chains with
// distinct RNG stream ids instead of sharing one.
class Chain {
public:
    Chain(const BinaryMatrix& start, Algorithm algorithm, RngStream rng);

    void step_once();
    void run(std::uint64_t steps);

    // Current matrix at full (original) size.
    BinaryMatrix snapshot() const;
    const ChainState& state() const { return state_; }
    std::uint64_t iterations() const { return state_.iteration; }
    std::uint64_t successful_swaps() const { return state_.successful_swaps; }

private:
    ChainState state_;
    RngStream rng_;
    std::optional<StripInfo> strip_;  // set when the working matrix is reduced
};

struct RunResult {
    ChainState final_state;
};

using SampleObserver = std::function<void(const BinaryMatrix& snapshot, std::uint64_t iteration)>;

// Performs exactly `iterations` steps; after `burn_in` steps the observer is
// invoked with a full-size snapshot every `thin` steps.
RunResult run_chain(const BinaryMatrix& start, Algorithm algorithm,
                    std::uint64_t iterations, RngStream rng, std::uint64_t thin = 1,
                    std::uint64_t burn_in = 0, const SampleObserver& observer = nullptr);

}  // namespace margin_mcmc

#endif
