#include "core/feasibility.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "core/error.hpp"

namespace margin_mcmc {

bool gale_ryser_feasible(const Margins& margins) {
    int m = static_cast<int>(margins.rows.size());
    int n = static_cast<int>(margins.cols.size());
    for (int r : margins.rows) {
        if (r < 0 || r > n) return false;
    }
    for (int c : margins.cols) {
        if (c < 0 || c > m) return false;
    }
    long long row_total = std::accumulate(margins.rows.begin(), margins.rows.end(), 0LL);
    long long col_total = std::accumulate(margins.cols.begin(), margins.cols.end(), 0LL);
    if (row_total != col_total) return false;

    std::vector<int> sorted_rows = margins.rows;  // the caller's vector stays put
    std::sort(sorted_rows.begin(), sorted_rows.end(), std::greater<int>());
    long long prefix = 0;
    for (int k = 1; k <= m; ++k) {
        prefix += sorted_rows[k - 1];
        long long capacity = 0;
        for (int c : margins.cols) {
            capacity += std::min(c, k);
        }
        if (prefix > capacity) return false;
    }
    return true;
}

bool is_degenerate(const Margins& margins) {
    int m = static_cast<int>(margins.rows.size());
    int n = static_cast<int>(margins.cols.size());
    for (int r : margins.rows) {
        if (r <= 0 || r >= n) return true;
    }
    for (int c : margins.cols) {
        if (c <= 0 || c >= m) return true;
    }
    return false;
}

namespace {

// Shared driver: repeatedly removes the first degenerate line. `value_of`
// reports the constant a line carries, `remove` drops it from the working
// instance.
template <typename RowSum, typename ColSum, typename Remove>
StripInfo strip_loop(int& m, int& n, RowSum row_sum, ColSum col_sum, Remove remove,
                     int original_rows, int original_cols) {
    StripInfo info;
    info.original_rows = original_rows;
    info.original_cols = original_cols;
    bool changed = true;
    while (changed && m > 0 && n > 0) {
        changed = false;
        for (int i = 0; i < m; ++i) {
            int r = row_sum(i);
            if (r == 0 || r == n) {
                info.ops.push_back({true, i, r == n});
                remove(true, i);
                --m;
                changed = true;
                break;
            }
        }
        if (changed) continue;
        for (int j = 0; j < n; ++j) {
            int c = col_sum(j);
            if (c == 0 || c == m) {
                info.ops.push_back({false, j, c == m});
                remove(false, j);
                --n;
                changed = true;
                break;
            }
        }
    }
    // A surviving 1xN or Mx1 instance would have every line degenerate, so
    // once one dimension empties the other must be drained as well.
    while (m > 0 && n == 0) {
        info.ops.push_back({true, 0, false});
        remove(true, 0);
        --m;
    }
    while (n > 0 && m == 0) {
        info.ops.push_back({false, 0, false});
        remove(false, 0);
        --n;
    }
    return info;
}

}  // namespace

StrippedMatrix strip_degenerate(const BinaryMatrix& matrix) {
    // Work on index lists; materialize the reduced matrix at the end.
    std::vector<int> rows(matrix.rows()), cols(matrix.cols());
    for (int i = 0; i < matrix.rows(); ++i) rows[i] = i;
    for (int j = 0; j < matrix.cols(); ++j) cols[j] = j;

    auto row_sum = [&](int i) {
        int s = 0;
        for (int j : cols) s += matrix.get(rows[i], j);
        return s;
    };
    auto col_sum = [&](int j) {
        int s = 0;
        for (int i : rows) s += matrix.get(i, cols[j]);
        return s;
    };
    auto remove = [&](bool is_row, int idx) {
        if (is_row) {
            rows.erase(rows.begin() + idx);
        } else {
            cols.erase(cols.begin() + idx);
        }
    };

    int m = matrix.rows(), n = matrix.cols();
    StripInfo info =
        strip_loop(m, n, row_sum, col_sum, remove, matrix.rows(), matrix.cols());

    BinaryMatrix reduced(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (matrix.get(rows[i], cols[j])) {
                reduced.set(static_cast<int>(i), static_cast<int>(j), true);
            }
        }
    }
    return {std::move(reduced), std::move(info)};
}

StrippedMargins strip_degenerate(const Margins& margins) {
    std::vector<int> r = margins.rows, c = margins.cols;

    auto row_sum = [&](int i) { return r[i]; };
    auto col_sum = [&](int j) { return c[j]; };
    auto remove = [&](bool is_row, int idx) {
        if (is_row) {
            // A full row contributes one 1 to every remaining column.
            if (r[idx] == static_cast<int>(c.size())) {
                for (int& cj : c) --cj;
            }
            r.erase(r.begin() + idx);
        } else {
            if (c[idx] == static_cast<int>(r.size())) {
                for (int& ri : r) --ri;
            }
            c.erase(c.begin() + idx);
        }
    };

    int m = static_cast<int>(r.size()), n = static_cast<int>(c.size());
    StripInfo info = strip_loop(m, n, row_sum, col_sum, remove,
                                static_cast<int>(margins.rows.size()),
                                static_cast<int>(margins.cols.size()));
    return {Margins{std::move(r), std::move(c)}, std::move(info)};
}

BinaryMatrix reconstruct(const BinaryMatrix& reduced, const StripInfo& info) {
    // Replay removals backwards, inserting each constant line where it was.
    // Width/height counters stay authoritative even while the grid has no
    // materialized rows.
    std::vector<std::vector<int>> grid(reduced.rows(), std::vector<int>(reduced.cols()));
    for (int i = 0; i < reduced.rows(); ++i) {
        for (int j = 0; j < reduced.cols(); ++j) {
            grid[i][j] = reduced.get(i, j) ? 1 : 0;
        }
    }
    int cur_rows = reduced.rows(), cur_cols = reduced.cols();
    for (auto it = info.ops.rbegin(); it != info.ops.rend(); ++it) {
        if (it->is_row) {
            grid.insert(grid.begin() + it->index,
                        std::vector<int>(cur_cols, it->value ? 1 : 0));
            ++cur_rows;
        } else {
            for (auto& row : grid) {
                row.insert(row.begin() + it->index, it->value ? 1 : 0);
            }
            ++cur_cols;
        }
    }
    if (cur_rows != info.original_rows || cur_cols != info.original_cols) {
        throw Error(ErrorCode::internal, "reconstruction does not match original shape");
    }
    if (grid.empty() || cur_cols == 0) return BinaryMatrix(cur_rows, cur_cols);
    return BinaryMatrix::from_grid(grid);
}

}  // namespace margin_mcmc
