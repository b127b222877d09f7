#ifndef MARGIN_MCMC_TEXT_IO_HPP
#define MARGIN_MCMC_TEXT_IO_HPP

#include <string>

#include "core/binary_matrix.hpp"

namespace margin_mcmc {

// Matrix text format used by every command: one row per line, cells written
// as `0`/`1` separated by single spaces, no header.

BinaryMatrix parse_matrix(const std::string& text);
BinaryMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const BinaryMatrix& m);

}  // namespace margin_mcmc

#endif
