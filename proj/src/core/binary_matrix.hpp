#ifndef MARGIN_MCMC_BINARY_MATRIX_HPP
#define MARGIN_MCMC_BINARY_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace margin_mcmc {

// Row and column sums of an instance. Not required to be consistent or even
// feasible at construction; feasibility is a separate query.
struct Margins {
    std::vector<int> rows;
    std::vector<int> cols;

    bool operator==(const Margins&) const = default;
};

// Coordinates of a 2x2 submatrix: two distinct rows, two distinct columns.
struct SwapQuad {
    int r1;
    int r2;
    int c1;
    int c2;
};

// Dense 0/1 matrix with bit-packed storage and cached margins. Bits are kept
// both row-major and column-major so that chains can select entries within a
// row or a column in O(words) time; a swap touches four cells and updates
// both copies and the cached sums incrementally.
class BinaryMatrix {
public:
    BinaryMatrix() : rows_(0), cols_(0), row_words_(0), col_words_(0) {}
    BinaryMatrix(int rows, int cols);  // all zeros

    // Validates every entry; rejects ragged or non-binary grids naming the
    // offending coordinate.
    static BinaryMatrix from_grid(const std::vector<std::vector<int>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    bool get(int i, int j) const {
        return (row_bits_[static_cast<std::size_t>(i) * row_words_ + j / 64] >>
                (j % 64)) & 1u;
    }
    void set(int i, int j, bool value);

    const std::vector<int>& row_sums() const { return row_sums_; }
    const std::vector<int>& col_sums() const { return col_sums_; }
    Margins margins() const { return {row_sums_, col_sums_}; }

    bool is_checkerboard(const SwapQuad& q) const;
    // Complements the four cells of q; q must be a checkerboard unit.
    void apply_swap(const SwapQuad& q);
    BinaryMatrix swapped(const SwapQuad& q) const;

    // Position of the k-th (0-based) set/clear bit in a row or column.
    int kth_one_in_row(int i, int k) const;
    int kth_zero_in_row(int i, int k) const;
    int kth_one_in_col(int j, int k) const;
    int kth_zero_in_col(int j, int k) const;

    std::vector<int> ones_in_row(int i) const;

    // Number of columns where both rows have a 1.
    int row_inner_product(int i, int j) const;

    // Row-major bit string, e.g. "1001" for [[1,0],[0,1]]. Equal matrices map
    // to equal keys and keys are totally ordered as strings.
    std::string key() const;

    bool operator==(const BinaryMatrix& other) const;

    void check_bounds(int i, int j) const;
    void check_quad(const SwapQuad& q) const;

private:
    int rows_, cols_;
    int row_words_, col_words_;
    std::vector<std::uint64_t> row_bits_;  // rows_ * row_words_
    std::vector<std::uint64_t> col_bits_;  // cols_ * col_words_
    std::vector<int> row_sums_, col_sums_;
};

}  // namespace margin_mcmc

#endif
