#ifndef MARGIN_MCMC_ENUMERATION_HPP
#define MARGIN_MCMC_ENUMERATION_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "core/binary_matrix.hpp"

namespace margin_mcmc {

// Every matrix carrying a fixed pair of margins, sorted by canonical key.
struct StateSpace {
    Margins margins;
    std::vector<BinaryMatrix> states;
    std::map<std::string, std::size_t> index;

    std::size_t size() const { return states.size(); }

    // Position of `m` in the space; throws if absent.
    std::size_t index_of(const BinaryMatrix& m) const;
    // Like index_of but returns npos instead of throwing.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t find(const BinaryMatrix& m) const;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

// Fills rows top to bottom, choosing the 1-columns of each row as subsets in
// lexicographic order and pruning any prefix whose residual column sums fail
// Gale-Ryser against the remaining rows. Infeasible margins give an empty
// space; exceeding `cap` throws ErrorCode::limit with the partial count in
// the message.
StateSpace enumerate_state_space(const Margins& margins,
                                 std::size_t cap = kDefaultStateCap);

}  // namespace margin_mcmc

#endif
