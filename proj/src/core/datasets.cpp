#include "core/datasets.hpp"

#include <array>

#include "core/error.hpp"
#include "core/text_io.hpp"

namespace margin_mcmc {

namespace {

// Rows: species 1-13; columns: islands A-Q.
constexpr std::array<const char*, 13> kFinchRows = {
    "0 0 1 1 1 1 1 1 1 1 0 1 1 1 1 1 1",
    "1 1 1 1 1 1 1 1 1 1 0 1 0 1 1 0 0",
    "1 1 1 1 1 1 1 1 1 1 1 1 0 1 1 0 0",
    "0 0 1 1 1 0 0 1 0 1 0 1 1 0 1 1 1",
    "1 1 1 0 1 1 1 1 1 1 0 1 0 1 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0",
    "0 0 1 1 1 1 1 1 1 0 0 1 0 1 1 0 0",
    "0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0",
    "0 0 1 1 1 1 1 1 1 1 0 1 0 0 1 0 0",
    "0 0 1 1 1 1 1 1 1 1 0 1 0 1 1 0 0",
    "0 0 1 1 1 0 1 1 0 1 0 0 0 0 0 0 0",
    "0 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0",
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
};

constexpr std::array<int, 13> kFinchRowSums = {14, 13, 14, 10, 12, 2, 10, 1, 10, 11, 6, 2, 17};
constexpr std::array<int, 17> kFinchColSums = {4, 4, 11, 10, 10, 8, 9, 10,
                                               8, 9, 4, 9, 4, 7, 9, 3, 3};

void self_check(const BinaryMatrix& m) {
    if (m.rows() != 13 || m.cols() != 17) {
        throw Error(ErrorCode::internal, "finch dataset has the wrong shape");
    }
    for (int i = 0; i < 13; ++i) {
        if (m.row_sums()[i] != kFinchRowSums[i]) {
            throw Error(ErrorCode::internal,
                        "finch row " + std::to_string(i + 1) + " sum mismatch");
        }
    }
    for (int j = 0; j < 17; ++j) {
        if (m.col_sums()[j] != kFinchColSums[j]) {
            throw Error(ErrorCode::internal,
                        "finch column " + std::to_string(j + 1) + " sum mismatch");
        }
    }
    // Transcription guard: of the C(13,2)*C(17,2) = 10608 2x2 submatrices,
    // about 3% are swappable.
    int total = 0, swappable = 0;
    for (int r1 = 0; r1 < 13; ++r1) {
        for (int r2 = r1 + 1; r2 < 13; ++r2) {
            for (int c1 = 0; c1 < 17; ++c1) {
                for (int c2 = c1 + 1; c2 < 17; ++c2) {
                    ++total;
                    if (m.is_checkerboard({r1, r2, c1, c2})) ++swappable;
                }
            }
        }
    }
    if (total != 10608) {
        throw Error(ErrorCode::internal, "finch quad count mismatch");
    }
    double fraction = static_cast<double>(swappable) / total;
    if (fraction < 0.02 || fraction > 0.04) {
        throw Error(ErrorCode::internal,
                    "finch swappable fraction " + std::to_string(fraction) +
                        " outside [0.02, 0.04]");
    }
}

}  // namespace

BinaryMatrix finch_dataset() {
    std::string text;
    for (const char* row : kFinchRows) {
        text += row;
        text += '\n';
    }
    BinaryMatrix m = parse_matrix(text);
    self_check(m);
    return m;
}

BinaryMatrix load_dataset(const std::string& name_or_path) {
    if (name_or_path == "finch") return finch_dataset();
    return read_matrix_file(name_or_path);
}

}  // namespace margin_mcmc
