#pragma once

#include <string>

#include "wythoff.h"

namespace cli {

// Text grid: one character per cell ('P', '.', '#' for cut cells), row 0
// printed last so the origin sits at the lower left.
std::string render_grid_txt(const wythoff_table* table);

// Binary P6 raster, one pixel per cell: P black, N white, cut gray.
std::string render_ppm(const wythoff_table* table);

// SVG with one unit square per cell, same palette as the raster.
std::string render_svg(const wythoff_table* table);

}  // namespace cli
