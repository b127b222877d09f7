#ifndef MARGIN_MCMC_TOOLS_CSV_HPP
#define MARGIN_MCMC_TOOLS_CSV_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cli {

// Deterministic CSV: one metadata comment line, a header, then the rows,
// all LF-terminated. An empty row list still produces the header.
inline void write_csv(const std::string& path, const std::string& metadata,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << "# " << metadata << "\n";
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("short write to '" + path + "'");
    }
}

}  // namespace cli

#endif
