#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "towers/core_model.hpp"

namespace towers {

struct GalleryLayout {
    int unit = 12;    ///< px per unit of length and per floor
    int gutter = 2;   ///< px between cells and around the grid
};

/// Every canonical tower of the shape with exactly `pieces_count` pieces,
/// in enumeration order.
std::vector<Tower> gallery_towers(const PieceSet& pieces, ShapeClass shape, int pieces_count);

/// SVG grid, one <g class="tower"> per tower, ceil(sqrt(count)) per row.
std::string render_gallery_svg(const std::vector<Tower>& towers, const PieceSet& pieces, ShapeClass shape,
                               int pieces_count, const GalleryLayout& layout = {});

/// Renders to `path` and returns the number of towers drawn. InputError if
/// the file cannot be written.
std::size_t render_gallery(const PieceSet& pieces, ShapeClass shape, int pieces_count, const std::string& path,
                           const GalleryLayout& layout = {});

}  // namespace towers
