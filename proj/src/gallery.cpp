#include "towers/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "towers/enumerator.hpp"
#include "towers/errors.hpp"

namespace towers {
namespace {

struct Extent {
    std::int64_t left = 0;
    std::int64_t right = 0;
};

Extent extent_of(const Tower& t) {
    Extent e{t.floors().front().front().left, t.floors().front().front().right()};
    for (const auto& floor : t.floors())
        for (const auto& p : floor) {
            e.left = std::min(e.left, p.left);
            e.right = std::max(e.right, p.right());
        }
    return e;
}

const char* fill_for(int size) {
    static const char* palette[] = {"#f2c14e", "#7fb7be", "#d3968c", "#9fc490", "#b8a1d9", "#e39e54"};
    return palette[static_cast<std::size_t>(size - 1) % 6];
}

}  // namespace

std::vector<Tower> gallery_towers(const PieceSet& pieces, ShapeClass shape, int pieces_count) {
    if (pieces_count < 1) throw InputError("gallery needs at least one piece");
    EnumerationQuery q{pieces, shape, BoundKind::ByPieceCount, pieces_count, false};
    std::vector<Tower> out;
    enumerate_towers(q, [&](const Tower& t) {
        if (t.piece_count() == static_cast<std::size_t>(pieces_count)) out.push_back(t);
    });
    return out;
}

std::string render_gallery_svg(const std::vector<Tower>& towers, const PieceSet& pieces, ShapeClass shape,
                               int pieces_count, const GalleryLayout& layout) {
    const std::size_t count = towers.size();
    const std::size_t per_row = count == 0 ? 1 : static_cast<std::size_t>(std::ceil(std::sqrt(double(count))));
    const std::size_t rows = count == 0 ? 0 : (count + per_row - 1) / per_row;

    std::int64_t cell_w = 1;
    std::int64_t cell_h = 1;
    for (const auto& t : towers) {
        const Extent e = extent_of(t);
        cell_w = std::max(cell_w, e.right - e.left);
        cell_h = std::max(cell_h, static_cast<std::int64_t>(t.floor_count()));
    }
    const std::int64_t u = layout.unit;
    const std::int64_t g = layout.gutter;
    const std::int64_t caption = 2 * u;
    const std::int64_t width = g + static_cast<std::int64_t>(per_row) * (cell_w * u + g);
    const std::int64_t height = caption + g + static_cast<std::int64_t>(rows) * (cell_h * u + g);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <metadata>{\"sizes\":\"" << pieces.describe() << "\",\"shape\":\"" << to_string(shape)
        << "\",\"pieces\":" << pieces_count << ",\"count\":" << count << "}</metadata>\n";
    svg << "  <text x=\"" << g << "\" y=\"" << (caption - 6) << "\" font-family=\"monospace\" font-size=\"" << u
        << "\">" << count << ' ' << to_string(shape) << (count == 1 ? "" : "s") << " with " << pieces_count
        << " pieces, " << pieces.describe() << "</text>\n";

    for (std::size_t idx = 0; idx < count; ++idx) {
        const Tower& t = towers[idx];
        const Extent e = extent_of(t);
        const std::int64_t ox = g + static_cast<std::int64_t>(idx % per_row) * (cell_w * u + g);
        const std::int64_t oy = caption + g + static_cast<std::int64_t>(idx / per_row) * (cell_h * u + g);
        svg << "  <g class=\"tower\" data-index=\"" << idx << "\" data-floors=\"" << t.to_string() << "\">\n";
        for (std::size_t f = 0; f < t.floor_count(); ++f) {
            const std::int64_t y = oy + (cell_h - 1 - static_cast<std::int64_t>(f)) * u;
            for (const auto& p : t.floors()[f]) {
                svg << "    <rect x=\"" << ox + (p.left - e.left) * u << "\" y=\"" << y << "\" width=\""
                    << p.size * u << "\" height=\"" << u << "\" fill=\"" << fill_for(p.size)
                    << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
            }
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::size_t render_gallery(const PieceSet& pieces, ShapeClass shape, int pieces_count, const std::string& path,
                           const GalleryLayout& layout) {
    const auto towers = gallery_towers(pieces, shape, pieces_count);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << render_gallery_svg(towers, pieces, shape, pieces_count, layout);
    out.flush();
    if (!out) throw InputError("failed writing '" + path + "'");
    return towers.size();
}

}  // namespace towers
