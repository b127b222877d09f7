#ifndef MARGIN_MCMC_DATASETS_HPP
#define MARGIN_MCMC_DATASETS_HPP

#include <string>

#include "core/binary_matrix.hpp"

namespace margin_mcmc {

// Darwin's finches on the Galapagos islands: presence/absence of 13 species
// across 17 islands. Validated on load against its known margins and the
// known swappable-quad fraction (about 3% of the 10608 2x2 submatrices).
BinaryMatrix finch_dataset();

// "finch" or a path to a matrix text file.
BinaryMatrix load_dataset(const std::string& name_or_path);

}  // namespace margin_mcmc

#endif
