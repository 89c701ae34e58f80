#include "pierce/svg.hpp"

#include <algorithm>
#include <array>

namespace pierce::io {

void write_family_svg(const geom::RegionFamily& family, std::ostream& out) {
    std::int64_t min_x = 0, min_y = 0, max_x = 1, max_y = 1;
    bool first = true;
    for (const geom::PolygonRegion& region : family.regions)
        for (const geom::IPoint& p : region.outer) {
            if (first) {
                min_x = max_x = p.x;
                min_y = max_y = p.y;
                first = false;
            }
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    const std::int64_t pad = std::max<std::int64_t>((max_x - min_x) / 20, 1);

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (min_x - pad)
        << " " << (min_y - pad) << " " << (max_x - min_x + 2 * pad) << " "
        << (max_y - min_y + 2 * pad) << "\">\n";
    // flip y so the drawing matches mathematical orientation
    out << "<g transform=\"translate(0 " << (min_y + max_y) << ") scale(1 -1)\">\n";

    static constexpr std::array<const char*, 6> colors = {
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    const auto emit_ring = [&](const geom::Ring& ring) {
        out << "M";
        for (std::size_t i = 0; i < ring.size(); ++i)
            out << (i == 0 ? " " : " L ") << ring[i].x << " " << ring[i].y;
        out << " Z ";
    };
    for (std::size_t r = 0; r < family.regions.size(); ++r) {
        const geom::PolygonRegion& region = family.regions[r];
        out << "<path fill=\"" << colors[r % colors.size()]
            << "\" fill-opacity=\"0.35\" stroke=\"" << colors[r % colors.size()]
            << "\" stroke-width=\"" << pad / 4 + 1 << "\" fill-rule=\"evenodd\" d=\"";
        emit_ring(region.outer);
        for (const geom::Ring& hole : region.holes) emit_ring(hole);
        out << "\"><title>" << region.name << "</title></path>\n";
    }
    out << "</g>\n</svg>\n";
}

} // namespace pierce::io
