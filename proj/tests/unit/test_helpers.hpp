#ifndef MARGIN_MCMC_TEST_HELPERS_HPP
#define MARGIN_MCMC_TEST_HELPERS_HPP

#include <array>
#include <map>
#include <vector>

#include "core/binary_matrix.hpp"
#include "core/rational.hpp"

namespace test_helpers {

using margin_mcmc::BinaryMatrix;
using margin_mcmc::Margins;
using margin_mcmc::Rational;

inline BinaryMatrix mat(const std::vector<std::vector<int>>& grid) {
    return BinaryMatrix::from_grid(grid);
}

// The five 3x3 matrices with row and column sums [1,2,1], in the reference
// order A..E used throughout the tests.
inline std::vector<BinaryMatrix> reference_states() {
    return {
        mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}),  // A
        mat({{0, 1, 0}, {1, 1, 0}, {0, 0, 1}}),  // B
        mat({{1, 0, 0}, {0, 1, 1}, {0, 1, 0}}),  // C
        mat({{0, 1, 0}, {0, 1, 1}, {1, 0, 0}}),  // D
        mat({{0, 0, 1}, {1, 1, 0}, {0, 1, 0}}),  // E
    };
}

using RationalGrid = std::vector<std::vector<Rational>>;

inline RationalGrid reference_swap_kernel() {
    Rational t{1, 9}, d{2, 3}, a{5, 9}, z{0};
    return {{a, t, t, t, t},
            {t, d, z, t, t},
            {t, z, d, t, t},
            {t, t, t, d, z},
            {t, t, t, z, d}};
}

inline RationalGrid reference_curveball_kernel() {
    Rational s{1, 6}, d{1, 3}, z{0};
    return {{d, s, s, s, s},
            {s, d, z, s, d},
            {s, z, d, d, s},
            {s, s, d, d, z},
            {s, d, s, z, d}};
}

inline RationalGrid reference_rectangle_kernel() {
    Rational q{1, 4}, t{1, 3}, s{1, 6}, z{0};
    return {{z, q, q, q, q},
            {q, q, z, t, s},
            {q, z, q, s, t},
            {q, t, s, q, z},
            {q, s, t, z, q}};
}

struct MarginsLess {
    bool operator()(const Margins& a, const Margins& b) const {
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.cols < b.cols;
    }
};

using Census = std::map<Margins, std::vector<BinaryMatrix>, MarginsLess>;

// Independent oracle: every one of the 2^(rows*cols) grids, grouped by its
// margins. Feasible only for tiny shapes.
inline Census brute_force_census(int rows, int cols) {
    Census census;
    int cells = rows * cols;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        BinaryMatrix m(rows, cols);
        for (int bit = 0; bit < cells; ++bit) {
            if (mask & (std::uint64_t{1} << bit)) m.set(bit / cols, bit % cols, true);
        }
        census[m.margins()].push_back(m);
    }
    return census;
}

}  // namespace test_helpers

#endif
