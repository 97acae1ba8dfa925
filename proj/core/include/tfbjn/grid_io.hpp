#pragma once

#include <filesystem>

#include "tfbjn/grid.hpp"

namespace tfbjn {

// Grid CSV: three '#' header lines (dims, axis1, axis2), then rows "i,j,re,im"
// at 17 significant digits. load(save(g)) is bit-exact.
void save_grid_csv(const Grid2D& g, const std::filesystem::path& path);
Grid2D load_grid_csv(const std::filesystem::path& path);

/// 16-bit binary PGM of the real part, rows = axis1, columns = axis2; values
/// affinely mapped from [min, max] to [0, 65535] (all zero when min == max).
/// Returns the (min, max) pair used for the mapping.
std::pair<double, double> save_grid_pgm16(const Grid2D& g, const std::filesystem::path& path);

/// Min and max of the real part (the PGM mapping range).
std::pair<double, double> real_range(const Grid2D& g);

}  // namespace tfbjn
