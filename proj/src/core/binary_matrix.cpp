#include "core/binary_matrix.hpp"

#include <bit>

#include "core/error.hpp"

namespace margin_mcmc {

namespace {

// Position of the k-th (0-based) set bit across a word span of `width` bits.
int select_bit(const std::uint64_t* words, int width, int k, bool ones) {
    int word_count = (width + 63) / 64;
    for (int w = 0; w < word_count; ++w) {
        std::uint64_t bits = ones ? words[w] : ~words[w];
        if (w == word_count - 1 && width % 64 != 0) {
            bits &= (std::uint64_t{1} << (width % 64)) - 1;
        }
        int pop = std::popcount(bits);
        if (k < pop) {
            for (int skipped = 0; skipped < k; ++skipped) {
                bits &= bits - 1;  // clear lowest set bit
            }
            return w * 64 + std::countr_zero(bits);
        }
        k -= pop;
    }
    throw Error(ErrorCode::invalid_argument, "bit rank out of range");
}

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows),
      cols_(cols),
      row_words_((cols + 63) / 64),
      col_words_((rows + 63) / 64),
      row_bits_(static_cast<std::size_t>(rows) * ((cols + 63) / 64), 0),
      col_bits_(static_cast<std::size_t>(cols) * ((rows + 63) / 64), 0),
      row_sums_(rows, 0),
      col_sums_(cols, 0) {
    if (rows < 0 || cols < 0) {
        throw Error(ErrorCode::invalid_argument, "negative matrix dimensions");
    }
}

BinaryMatrix BinaryMatrix::from_grid(const std::vector<std::vector<int>>& grid) {
    if (grid.empty() || grid.front().empty()) {
        throw Error(ErrorCode::invalid_argument, "empty grid");
    }
    int rows = static_cast<int>(grid.size());
    int cols = static_cast<int>(grid.front().size());
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(grid[i].size()) != cols) {
            throw Error(ErrorCode::invalid_argument,
                        "ragged grid: row " + std::to_string(i) + " has " +
                            std::to_string(grid[i].size()) + " entries, expected " +
                            std::to_string(cols));
        }
    }
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            int v = grid[i][j];
            if (v != 0 && v != 1) {
                throw Error(ErrorCode::invalid_argument,
                            "non-binary entry at (" + std::to_string(i) + "," +
                                std::to_string(j) + "): " + std::to_string(v));
            }
            if (v) m.set(i, j, true);
        }
    }
    return m;
}

void BinaryMatrix::set(int i, int j, bool value) {
    check_bounds(i, j);
    std::uint64_t& rw = row_bits_[static_cast<std::size_t>(i) * row_words_ + j / 64];
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    bool current = rw & mask;
    if (current == value) return;
    rw ^= mask;
    col_bits_[static_cast<std::size_t>(j) * col_words_ + i / 64] ^=
        std::uint64_t{1} << (i % 64);
    int delta = value ? 1 : -1;
    row_sums_[i] += delta;
    col_sums_[j] += delta;
}

bool BinaryMatrix::is_checkerboard(const SwapQuad& q) const {
    check_quad(q);
    bool a = get(q.r1, q.c1), b = get(q.r1, q.c2);
    bool c = get(q.r2, q.c1), d = get(q.r2, q.c2);
    return a == d && b == c && a != b;
}

void BinaryMatrix::apply_swap(const SwapQuad& q) {
    if (!is_checkerboard(q)) {
        throw Error(ErrorCode::invalid_argument,
                    "swap requested on a non-checkerboard quad");
    }
    // Complementing a checkerboard leaves every margin unchanged.
    set(q.r1, q.c1, !get(q.r1, q.c1));
    set(q.r1, q.c2, !get(q.r1, q.c2));
    set(q.r2, q.c1, !get(q.r2, q.c1));
    set(q.r2, q.c2, !get(q.r2, q.c2));
}

BinaryMatrix BinaryMatrix::swapped(const SwapQuad& q) const {
    BinaryMatrix copy = *this;
    copy.apply_swap(q);
    return copy;
}

int BinaryMatrix::kth_one_in_row(int i, int k) const {
    return select_bit(&row_bits_[static_cast<std::size_t>(i) * row_words_], cols_, k, true);
}

int BinaryMatrix::kth_zero_in_row(int i, int k) const {
    return select_bit(&row_bits_[static_cast<std::size_t>(i) * row_words_], cols_, k, false);
}

int BinaryMatrix::kth_one_in_col(int j, int k) const {
    return select_bit(&col_bits_[static_cast<std::size_t>(j) * col_words_], rows_, k, true);
}

int BinaryMatrix::kth_zero_in_col(int j, int k) const {
    return select_bit(&col_bits_[static_cast<std::size_t>(j) * col_words_], rows_, k, false);
}

std::vector<int> BinaryMatrix::ones_in_row(int i) const {
    std::vector<int> out;
    out.reserve(row_sums_[i]);
    for (int w = 0; w < row_words_; ++w) {
        std::uint64_t bits = row_bits_[static_cast<std::size_t>(i) * row_words_ + w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

int BinaryMatrix::row_inner_product(int i, int j) const {
    int total = 0;
    const std::uint64_t* a = &row_bits_[static_cast<std::size_t>(i) * row_words_];
    const std::uint64_t* b = &row_bits_[static_cast<std::size_t>(j) * row_words_];
    for (int w = 0; w < row_words_; ++w) {
        total += std::popcount(a[w] & b[w]);
    }
    return total;
}

std::string BinaryMatrix::key() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            s.push_back(get(i, j) ? '1' : '0');
        }
    }
    return s;
}

bool BinaryMatrix::operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_bits_ == other.row_bits_;
}

void BinaryMatrix::check_bounds(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw Error(ErrorCode::invalid_argument,
                    "index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

void BinaryMatrix::check_quad(const SwapQuad& q) const {
    check_bounds(q.r1, q.c1);
    check_bounds(q.r2, q.c2);
    if (q.r1 == q.r2 || q.c1 == q.c2) {
        throw Error(ErrorCode::invalid_argument, "quad rows/columns must be distinct");
    }
}

}  // namespace margin_mcmc
