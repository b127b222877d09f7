#ifndef MARGIN_MCMC_FEASIBILITY_HPP
#define MARGIN_MCMC_FEASIBILITY_HPP

#include <vector>

#include "core/binary_matrix.hpp"

namespace margin_mcmc {

// Gale-Ryser: a binary matrix with the given margins exists iff the sums
// agree and, with the row sums sorted descending, every prefix satisfies
// sum_{i<=k} r_i <= sum_j min(c_j, k). Entries outside [0,n] / [0,m] make
// the instance infeasible (returns false, not an error). The input vectors
// are never reordered.
bool gale_ryser_feasible(const Margins& margins);

// One removal of a forced row or column: `index` is the position in the
// frame that existed just before this removal; `value` is the constant the
// removed line carried.
struct StripOp {
    bool is_row;
    int index;
    bool value;
};

struct StripInfo {
    std::vector<StripOp> ops;  // in removal order
    int original_rows = 0;
    int original_cols = 0;
    bool anything_stripped() const { return !ops.empty(); }
};

struct StrippedMatrix {
    BinaryMatrix reduced;
    StripInfo info;
};

struct StrippedMargins {
    Margins reduced;
    StripInfo info;
};

// Removes rows with sum 0 or n and columns with sum 0 or m, iterating until
// no degenerate line remains. A fully degenerate instance reduces to the
// empty problem. The reduced instance, when non-empty, has every row sum in
// (0, n') and every column sum in (0, m'), which in particular forces
// m' >= 2 and n' >= 2.
StrippedMatrix strip_degenerate(const BinaryMatrix& matrix);
StrippedMargins strip_degenerate(const Margins& margins);

// Reinserts the forced rows/columns around a reduced matrix. The reduced
// matrix must have the dimensions the strip produced.
BinaryMatrix reconstruct(const BinaryMatrix& reduced, const StripInfo& info);

bool is_degenerate(const Margins& margins);

}  // namespace margin_mcmc

#endif
