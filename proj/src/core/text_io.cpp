#include "core/text_io.hpp"

#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace margin_mcmc {

BinaryMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<int>> grid;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::vector<int> row;
        std::istringstream cells(line);
        std::string tok;
        while (cells >> tok) {
            if (tok == "0") {
                row.push_back(0);
            } else if (tok == "1") {
                row.push_back(1);
            } else {
                throw Error(ErrorCode::parse,
                            "line " + std::to_string(line_no) + ", column " +
                                std::to_string(row.size() + 1) + ": expected 0 or 1, got '" +
                                tok + "'");
            }
        }
        if (!grid.empty() && row.size() != grid.front().size()) {
            throw Error(ErrorCode::parse,
                        "line " + std::to_string(line_no) + ": has " +
                            std::to_string(row.size()) + " cells, expected " +
                            std::to_string(grid.front().size()));
        }
        grid.push_back(std::move(row));
    }
    if (grid.empty()) {
        throw Error(ErrorCode::parse, "no matrix rows found");
    }
    return BinaryMatrix::from_grid(grid);
}

BinaryMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::io, "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string format_matrix(const BinaryMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (2 * m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out.push_back(' ');
            out.push_back(m.get(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace margin_mcmc
