#ifndef MARGIN_MCMC_KERNELS_HPP
#define MARGIN_MCMC_KERNELS_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "core/binary_matrix.hpp"
#include "core/chains.hpp"
#include "core/enumeration.hpp"
#include "core/rational.hpp"

namespace margin_mcmc {

// Exact stochastic matrix over an enumerated state space. Every row sums to
// exactly 1 in rational arithmetic (checked at construction).
class TransitionMatrix {
public:
    TransitionMatrix(std::shared_ptr<const StateSpace> space,
                     std::vector<Rational> entries);

    const StateSpace& space() const { return *space_; }
    std::shared_ptr<const StateSpace> space_ptr() const { return space_; }
    std::size_t size() const { return space_->size(); }
    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * size() + j];
    }

private:
    std::shared_ptr<const StateSpace> space_;
    std::vector<Rational> entries_;
};

// The quad on which two matrices with equal margins differ, when they differ
// in exactly one checkerboard unit; empty otherwise.
std::optional<SwapQuad> swap_difference(const BinaryMatrix& a, const BinaryMatrix& b);

// Off-diagonal entries are 1/(C(m,2) C(n,2)) between swappable states and 0
// otherwise; the diagonal absorbs the rest.
TransitionMatrix build_swap_kernel(std::shared_ptr<const StateSpace> space);

// Exhaustive enumeration over all row pairs and all equal-size trade-pool
// subsets, identity excluded unless forced (matching curveball_step).
TransitionMatrix build_curveball_kernel(std::shared_ptr<const StateSpace> space);

// Built two independent ways: the closed form per swappable pair, and
// exhaustive enumeration of every starting cell and conditional choice of
// the step. The two constructions must agree entry for entry; a mismatch is
// an internal-consistency error. Requires non-degenerate margins.
TransitionMatrix build_rectangle_kernel(std::shared_ptr<const StateSpace> space);

// Closed form for the one-step Rectangle Loop probability between two
// swappable matrices, from the quad's rows/columns and the margins:
//   (1/mn) [ 1/((n-r1) cB) + 1/(cB (n-r2)) + 1/((n-r2) cA) + 1/(cA (n-r1)) ]
// with r1, r2 the two row sums and cA, cB the two column sums of the quad.
Rational rectangle_pair_probability(const BinaryMatrix& a, const BinaryMatrix& b);

TransitionMatrix build_kernel(std::shared_ptr<const StateSpace> space, Algorithm algorithm);

struct StationarityResult {
    bool exact;             // uniform is exactly stationary
    Rational max_residual;  // max_j |(pi P - pi)_j|, exact
};
StationarityResult check_stationarity(const TransitionMatrix& kernel);

bool is_symmetric(const TransitionMatrix& kernel);

struct DominanceResult {
    bool dominates;  // every off-diagonal of first >= second
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // first violation
};
// Exact off-diagonal comparison; the kernels must share a state space.
DominanceResult check_peskun_dominance(const TransitionMatrix& first,
                                       const TransitionMatrix& second);

// Half the L1 distance from the uniform distribution.
double tv_from_uniform(const std::vector<double>& distribution);

// max-over-start total variation of P^k against uniform, for k = 1..k_max.
// Construction is exact; powers are double precision.
std::vector<double> tv_distance_curve(const TransitionMatrix& kernel, int k_max);

}  // namespace margin_mcmc

#endif
