#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"

#include "core/binary_matrix.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/text_io.hpp"
#include "test_helpers.hpp"

using namespace margin_mcmc;
using test_helpers::mat;

TEST_CASE("from_grid caches consistent margins") {
    BinaryMatrix m = mat({{0, 1}, {1, 0}});
    CHECK(m.row_sums() == std::vector<int>{1, 1});
    CHECK(m.col_sums() == std::vector<int>{1, 1});

    BinaryMatrix a = mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(a.row_sums() == std::vector<int>{1, 2, 1});
    CHECK(a.col_sums() == std::vector<int>{1, 2, 1});
}

TEST_CASE("from_grid rejects bad grids naming the offending cell") {
    CHECK_THROWS_WITH_AS(mat({{0, 2}}), doctest::Contains("(0,1)"), Error);
    CHECK_THROWS_AS(mat({{0, 1}, {1}}), Error);
    CHECK_THROWS_AS(mat({}), Error);
}

TEST_CASE("checkerboard detection matches the two diagonal patterns") {
    CHECK(mat({{1, 0}, {0, 1}}).is_checkerboard({0, 1, 0, 1}));
    CHECK(mat({{0, 1}, {1, 0}}).is_checkerboard({0, 1, 0, 1}));
    CHECK_FALSE(mat({{1, 1}, {0, 1}}).is_checkerboard({0, 1, 0, 1}));
    CHECK_FALSE(mat({{1, 1}, {1, 1}}).is_checkerboard({0, 1, 0, 1}));

    // State A has a checkerboard on rows {1,2} x cols {1,2} (0-based 0,1).
    BinaryMatrix a = mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(a.is_checkerboard({0, 1, 0, 1}));
}

TEST_CASE("apply_swap complements the quad and nothing else") {
    BinaryMatrix m = mat({{1, 0}, {0, 1}});
    m.apply_swap({0, 1, 0, 1});
    CHECK(m == mat({{0, 1}, {1, 0}}));

    // Reference state B swapped on rows {2,3} x cols {2,3} gives state A.
    BinaryMatrix b = mat({{0, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    b.apply_swap({1, 2, 1, 2});
    CHECK(b == mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));

    CHECK_THROWS_AS(mat({{1, 1}, {1, 1}}).apply_swap({0, 1, 0, 1}), Error);
}

TEST_CASE("swaps preserve margins and invert themselves") {
    RngStream rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 2 + rng.index(5), cols = 2 + rng.index(5);
        BinaryMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (rng.bernoulli(0.5)) m.set(i, j, true);
            }
        }
        Margins before = m.margins();
        BinaryMatrix original = m;

        // Random swap sequence; record quads so we can replay it backwards.
        std::vector<SwapQuad> applied;
        for (int s = 0; s < 100; ++s) {
            auto [r1, r2] = rng.distinct_pair(rows);
            auto [c1, c2] = rng.distinct_pair(cols);
            SwapQuad q{r1, r2, c1, c2};
            if (m.is_checkerboard(q)) {
                m.apply_swap(q);
                applied.push_back(q);
            }
        }
        CHECK(m.margins() == before);

        // Cached sums equal fresh recomputation.
        for (int i = 0; i < rows; ++i) {
            int fresh = 0;
            for (int j = 0; j < cols; ++j) fresh += m.get(i, j);
            CHECK(m.row_sums()[i] == fresh);
        }
        for (int j = 0; j < cols; ++j) {
            int fresh = 0;
            for (int i = 0; i < rows; ++i) fresh += m.get(i, j);
            CHECK(m.col_sums()[j] == fresh);
        }

        // Involution: applying the sequence backwards restores the start.
        std::reverse(applied.begin(), applied.end());
        for (const SwapQuad& q : applied) m.apply_swap(q);
        CHECK(m == original);
    }
}

TEST_CASE("canonical keys are row-major bit strings") {
    CHECK(mat({{1, 0}, {0, 1}}).key() == "1001");
    CHECK(mat({{1, 0}, {0, 1}}).key() == mat({{1, 0}, {0, 1}}).key());

    std::set<std::string> keys;
    for (const BinaryMatrix& s : test_helpers::reference_states()) {
        keys.insert(s.key());
    }
    CHECK(keys.size() == 5);
}

TEST_CASE("bit selection finds the k-th one or zero") {
    BinaryMatrix m = mat({{0, 1, 1, 0, 1}, {1, 0, 0, 1, 0}});
    CHECK(m.kth_one_in_row(0, 0) == 1);
    CHECK(m.kth_one_in_row(0, 2) == 4);
    CHECK(m.kth_zero_in_row(0, 1) == 3);
    CHECK(m.kth_one_in_col(3, 0) == 1);
    CHECK(m.kth_zero_in_col(2, 0) == 1);
    CHECK_THROWS_AS(m.kth_one_in_row(0, 3), Error);

    // Wide row crossing the 64-bit word boundary.
    std::vector<std::vector<int>> wide(1, std::vector<int>(130, 0));
    wide[0][63] = wide[0][64] = wide[0][129] = 1;
    BinaryMatrix w = mat(wide);
    CHECK(w.kth_one_in_row(0, 0) == 63);
    CHECK(w.kth_one_in_row(0, 1) == 64);
    CHECK(w.kth_one_in_row(0, 2) == 129);
    CHECK(w.kth_zero_in_row(0, 63) == 65);
}

TEST_CASE("matrix text format round-trips") {
    BinaryMatrix a = mat({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(format_matrix(a) == "0 1 0\n1 0 1\n0 1 0\n");
    CHECK(parse_matrix(format_matrix(a)) == a);

    RngStream rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = 1 + rng.index(6), cols = 1 + rng.index(6);
        BinaryMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) {
                if (rng.bernoulli(0.4)) m.set(i, j, true);
            }
        }
        CHECK(parse_matrix(format_matrix(m)) == m);
    }
}

TEST_CASE("matrix text parse errors carry line and column") {
    CHECK_THROWS_WITH_AS(parse_matrix("0 1\n1 2\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_WITH_AS(parse_matrix("0 1\n1\n"), doctest::Contains("line 2"), Error);
    CHECK_THROWS_AS(parse_matrix(""), Error);
}
