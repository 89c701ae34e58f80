#include "pierce/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "pierce/errors.hpp"

namespace pierce::geom {

namespace {

using Wide = __int128;

Wide cross(const IPoint& a, const IPoint& b, const IPoint& c) {
    return Wide(b.x - a.x) * Wide(c.y - a.y) - Wide(b.y - a.y) * Wide(c.x - a.x);
}

Wide dot(const IPoint& o, const IPoint& a, const IPoint& b) {
    return Wide(a.x - o.x) * Wide(b.x - o.x) + Wide(a.y - o.y) * Wide(b.y - o.y);
}

int sign(Wide v) { return (v > 0) - (v < 0); }

std::string fmt(const Rational& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string fmt(const RPoint& p) { return "(" + fmt(p.x) + ", " + fmt(p.y) + ")"; }

RPoint to_rpoint(const IPoint& p) { return {Rational(p.x), Rational(p.y)}; }

} // namespace

int orient(const IPoint& a, const IPoint& b, const IPoint& c) {
    return sign(cross(a, b, c));
}

bool on_segment(const IPoint& p, const IPoint& a, const IPoint& b) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

BigInt signed_area2(const Ring& ring) {
    BigInt area = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const IPoint& a = ring[i];
        const IPoint& b = ring[(i + 1) % ring.size()];
        area += BigInt(a.x) * b.y - BigInt(b.x) * a.y;
    }
    return area;
}

bool lex_less(const RPoint& a, const RPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

// --- segment relations -------------------------------------------------------

namespace {

enum class SegRel {
    None,    // disjoint
    Proper,  // transversal crossing in both interiors
    Touch,   // single-point contact involving an endpoint
    Overlap, // collinear with a shared segment of positive length
};

SegRel seg_relation(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                    const IPoint& b2) {
    const int o1 = orient(a1, a2, b1);
    const int o2 = orient(a1, a2, b2);
    const int o3 = orient(b1, b2, a1);
    const int o4 = orient(b1, b2, a2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return SegRel::Proper;
    if (o1 == 0 && o2 == 0) {
        // collinear: compare 1-D extents
        const std::int64_t lo_x = std::max(std::min(a1.x, a2.x), std::min(b1.x, b2.x));
        const std::int64_t hi_x = std::min(std::max(a1.x, a2.x), std::max(b1.x, b2.x));
        const std::int64_t lo_y = std::max(std::min(a1.y, a2.y), std::min(b1.y, b2.y));
        const std::int64_t hi_y = std::min(std::max(a1.y, a2.y), std::max(b1.y, b2.y));
        if (lo_x > hi_x || lo_y > hi_y) return SegRel::None;
        if (lo_x == hi_x && lo_y == hi_y) return SegRel::Touch;
        return SegRel::Overlap;
    }
    if (on_segment(b1, a1, a2) || on_segment(b2, a1, a2) || on_segment(a1, b1, b2) ||
        on_segment(a2, b1, b2))
        return SegRel::Touch;
    return SegRel::None;
}

RPoint cross_point(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                   const IPoint& b2) {
    const BigInt dax = a2.x - a1.x, day = a2.y - a1.y;
    const BigInt dbx = b2.x - b1.x, dby = b2.y - b1.y;
    BigInt den = dax * dby - day * dbx;
    BigInt num = (BigInt(b1.x) - a1.x) * dby - (BigInt(b1.y) - a1.y) * dbx;
    // boost::rational rejects negative denominators for unbounded integers
    if (den < 0) {
        den = -den;
        num = -num;
    }
    const Rational t(num, den);
    return {Rational(a1.x) + t * Rational(dax), Rational(a1.y) + t * Rational(day)};
}

} // namespace

bool proper_crossing(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                     const IPoint& b2) {
    return seg_relation(a1, a2, b1, b2) == SegRel::Proper;
}

RPoint segment_crossing(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                        const IPoint& b2) {
    return cross_point(a1, a2, b1, b2);
}

namespace {

// --- ring validity -----------------------------------------------------------

std::optional<std::string> ring_defect(const Ring& ring) {
    const std::size_t n = ring.size();
    if (n < 3) return "has fewer than 3 vertices";
    for (const IPoint& p : ring)
        if (std::abs(p.x) > COORD_LIMIT || std::abs(p.y) > COORD_LIMIT)
            return "coordinate exceeds the supported range";
    for (std::size_t i = 0; i < n; ++i)
        if (ring[i] == ring[(i + 1) % n]) return "repeats consecutive vertices";
    for (std::size_t i = 0; i < n; ++i) {
        // zero-angle spike: the ring doubles back on itself
        const IPoint& a = ring[i];
        const IPoint& b = ring[(i + 1) % n];
        const IPoint& c = ring[(i + 2) % n];
        if (orient(a, b, c) == 0 && dot(b, a, c) > 0)
            return "doubles back on itself at (" + std::to_string(b.x) + ", " +
                   std::to_string(b.y) + ")";
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (seg_relation(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n]) !=
                SegRel::None)
                return "self-intersects";
        }
    }
    return std::nullopt;
}

// any contact between two rings, including single points
bool rings_touch(const Ring& a, const Ring& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (seg_relation(a[i], a[(i + 1) % a.size()], b[j],
                             b[(j + 1) % b.size()]) != SegRel::None)
                return true;
    return false;
}

// even-odd containment for a point known to avoid the ring's boundary
template <typename PointT>
bool point_in_ring(const PointT& p, const Ring& ring) {
    bool inside = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const IPoint& a = ring[i];
        const IPoint& b = ring[(i + 1) % ring.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            // p is strictly left of the edge iff the edge passes to its right
            if constexpr (std::is_same_v<PointT, IPoint>) {
                const int o = orient(a, b, p);
                if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
            } else {
                const Rational c = Rational(b.x - a.x) * (p.y - Rational(a.y)) -
                                   (p.x - Rational(a.x)) * Rational(b.y - a.y);
                if (b.y > a.y ? c > 0 : c < 0) inside = !inside;
            }
        }
    }
    return inside;
}

bool rpoint_on_segment(const RPoint& p, const IPoint& a, const IPoint& b) {
    const Rational c = Rational(b.x - a.x) * (p.y - Rational(a.y)) -
                       (p.x - Rational(a.x)) * Rational(b.y - a.y);
    if (c != 0) return false;
    return Rational(std::min(a.x, b.x)) <= p.x && p.x <= Rational(std::max(a.x, b.x)) &&
           Rational(std::min(a.y, b.y)) <= p.y && p.y <= Rational(std::max(a.y, b.y));
}

} // namespace

void validate_region(const PolygonRegion& region) {
    const auto fail = [&](const std::string& what) {
        throw MalformedRegion("region '" + region.name + "': " + what);
    };
    if (auto defect = ring_defect(region.outer)) fail("outer ring " + *defect);
    if (signed_area2(region.outer) <= 0) fail("outer ring must be counter-clockwise");
    for (std::size_t h = 0; h < region.holes.size(); ++h) {
        const Ring& hole = region.holes[h];
        const std::string id = "hole " + std::to_string(h) + " ";
        if (auto defect = ring_defect(hole)) fail(id + *defect);
        if (signed_area2(hole) >= 0) fail(id + "must be clockwise");
        if (rings_touch(hole, region.outer)) fail(id + "touches the outer ring");
        if (!point_in_ring(hole.front(), region.outer))
            fail(id + "lies outside the outer ring");
    }
    for (std::size_t h = 0; h < region.holes.size(); ++h)
        for (std::size_t k = h + 1; k < region.holes.size(); ++k) {
            const std::string id =
                "holes " + std::to_string(h) + " and " + std::to_string(k) + " ";
            if (rings_touch(region.holes[h], region.holes[k])) fail(id + "touch");
            if (point_in_ring(region.holes[h].front(), region.holes[k]) ||
                point_in_ring(region.holes[k].front(), region.holes[h]))
                fail(id + "are nested");
        }
}

void validate_family(const RegionFamily& family) {
    std::set<std::string> names;
    for (const PolygonRegion& region : family.regions) {
        if (!names.insert(region.name).second)
            throw MalformedRegion("duplicate region name '" + region.name + "'");
        validate_region(region);
    }
}

// --- general position ---------------------------------------------------------

namespace {

struct RingRef {
    int region;
    const Ring* ring;
};

std::vector<RingRef> family_rings(const RegionFamily& family) {
    std::vector<RingRef> refs;
    for (std::size_t r = 0; r < family.regions.size(); ++r) {
        refs.push_back({static_cast<int>(r), &family.regions[r].outer});
        for (const Ring& hole : family.regions[r].holes)
            refs.push_back({static_cast<int>(r), &hole});
    }
    return refs;
}

bool is_ring_vertex(const IPoint& p, const Ring& ring) {
    return std::find(ring.begin(), ring.end(), p) != ring.end();
}

bool is_region_vertex(const IPoint& p, const PolygonRegion& region) {
    if (is_ring_vertex(p, region.outer)) return true;
    for (const Ring& hole : region.holes)
        if (is_ring_vertex(p, hole)) return true;
    return false;
}

// incidence of a polygon vertex with another region's boundary
struct VertexIncidence {
    IPoint at;
    int vertex_region;
    int other_region;
    const Ring* vertex_ring;
    bool operator<(const VertexIncidence& o) const {
        return std::tie(at, vertex_region, other_region) <
               std::tie(o.at, o.vertex_region, o.other_region);
    }
};

ViolationKind classify_incidence(const RegionFamily& family,
                                 const VertexIncidence& inc) {
    const PolygonRegion& other = family.regions[inc.other_region];
    if (is_region_vertex(inc.at, other)) return ViolationKind::BoundaryThroughVertex;
    // find the (unique) edge of the other region whose interior holds the vertex
    const auto classify_against = [&](const Ring& ring) -> std::optional<ViolationKind> {
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const IPoint& fa = ring[i];
            const IPoint& fb = ring[(i + 1) % ring.size()];
            if (!on_segment(inc.at, fa, fb)) continue;
            const Ring& own = *inc.vertex_ring;
            const auto pos = std::find(own.begin(), own.end(), inc.at);
            const std::size_t idx = static_cast<std::size_t>(pos - own.begin());
            const IPoint& prev = own[(idx + own.size() - 1) % own.size()];
            const IPoint& next = own[(idx + 1) % own.size()];
            const int sp = orient(fa, fb, prev);
            const int sn = orient(fa, fb, next);
            if (sp * sn > 0) return ViolationKind::TangentialContact;
            return ViolationKind::BoundaryThroughVertex;
        }
        return std::nullopt;
    };
    if (auto kind = classify_against(other.outer)) return *kind;
    for (const Ring& hole : other.holes)
        if (auto kind = classify_against(hole)) return *kind;
    return ViolationKind::BoundaryThroughVertex;
}

} // namespace

GeneralPositionReport check_general_position(const RegionFamily& family) {
    validate_family(family);
    GeneralPositionReport report;
    const std::vector<RingRef> rings = family_rings(family);

    std::set<VertexIncidence> incidences;
    std::map<std::pair<Rational, Rational>, std::set<int>> crossing_regions;
    std::set<std::pair<Rational, Rational>> overlap_seen;

    const auto record_touch = [&](const IPoint& p, const RingRef& a, const RingRef& b) {
        // p is an endpoint of an edge; attribute it to the ring owning it
        if (is_ring_vertex(p, *a.ring))
            incidences.insert({p, a.region, b.region, a.ring});
        if (is_ring_vertex(p, *b.ring))
            incidences.insert({p, b.region, a.region, b.ring});
    };

    for (std::size_t ra = 0; ra < rings.size(); ++ra) {
        for (std::size_t rb = ra + 1; rb < rings.size(); ++rb) {
            const RingRef& A = rings[ra];
            const RingRef& B = rings[rb];
            if (A.region == B.region) continue; // same-region rings checked already
            const Ring& a = *A.ring;
            const Ring& b = *B.ring;
            for (std::size_t i = 0; i < a.size(); ++i) {
                const IPoint& a1 = a[i];
                const IPoint& a2 = a[(i + 1) % a.size()];
                for (std::size_t j = 0; j < b.size(); ++j) {
                    const IPoint& b1 = b[j];
                    const IPoint& b2 = b[(j + 1) % b.size()];
                    switch (seg_relation(a1, a2, b1, b2)) {
                    case SegRel::None:
                        break;
                    case SegRel::Proper: {
                        const RPoint p = cross_point(a1, a2, b1, b2);
                        crossing_regions[{p.x, p.y}].insert(A.region);
                        crossing_regions[{p.x, p.y}].insert(B.region);
                        break;
                    }
                    case SegRel::Overlap: {
                        const Rational mx =
                            (Rational(std::max(std::min(a1.x, a2.x), std::min(b1.x, b2.x))) +
                             Rational(std::min(std::max(a1.x, a2.x), std::max(b1.x, b2.x)))) /
                            2;
                        const Rational my =
                            (Rational(std::max(std::min(a1.y, a2.y), std::min(b1.y, b2.y))) +
                             Rational(std::min(std::max(a1.y, a2.y), std::max(b1.y, b2.y)))) /
                            2;
                        if (overlap_seen.insert({mx, my}).second)
                            report.violations.push_back({ViolationKind::OverlappingEdges,
                                                         {mx, my},
                                                         {std::min(A.region, B.region),
                                                          std::max(A.region, B.region)}});
                        break;
                    }
                    case SegRel::Touch:
                        for (const IPoint& p : {b1, b2})
                            if (on_segment(p, a1, a2)) record_touch(p, B, A);
                        for (const IPoint& p : {a1, a2})
                            if (on_segment(p, b1, b2)) record_touch(p, A, B);
                        break;
                    }
                }
            }
        }
    }

    for (const VertexIncidence& inc : incidences) {
        report.violations.push_back({classify_incidence(family, inc),
                                     to_rpoint(inc.at),
                                     {std::min(inc.vertex_region, inc.other_region),
                                      std::max(inc.vertex_region, inc.other_region)}});
    }
    for (const auto& [point, regions] : crossing_regions) {
        if (regions.size() >= 3)
            report.violations.push_back({ViolationKind::ThreeBoundariesAtPoint,
                                         {point.first, point.second},
                                         {regions.begin(), regions.end()}});
    }
    report.ok = report.violations.empty();
    return report;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::OverlappingEdges: return "overlapping-edges";
    case ViolationKind::BoundaryThroughVertex: return "boundary-through-vertex";
    case ViolationKind::ThreeBoundariesAtPoint: return "three-boundaries-at-point";
    case ViolationKind::TangentialContact: return "tangential-contact";
    }
    return "unknown";
}

std::string describe(const RegionFamily& family, const Violation& violation) {
    std::string names;
    for (int r : violation.regions) {
        if (!names.empty()) names += ", ";
        names += "'" + family.regions[r].name + "'";
    }
    return to_string(violation.kind) + " at " + fmt(violation.where) + " between " +
           names;
}

// --- crossing parity -----------------------------------------------------------

int crossing_parity(const Ring& a, const Ring& b) {
    if (auto defect = ring_defect(a))
        throw Degenerate("first curve " + *defect);
    if (auto defect = ring_defect(b))
        throw Degenerate("second curve " + *defect);
    int crossings = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const IPoint& a1 = a[i];
        const IPoint& a2 = a[(i + 1) % a.size()];
        for (std::size_t j = 0; j < b.size(); ++j) {
            const IPoint& b1 = b[j];
            const IPoint& b2 = b[(j + 1) % b.size()];
            switch (seg_relation(a1, a2, b1, b2)) {
            case SegRel::None:
                break;
            case SegRel::Proper:
                ++crossings;
                break;
            case SegRel::Overlap:
                throw Degenerate("curves coincide along a segment");
            case SegRel::Touch:
                throw Degenerate("curves touch at a vertex");
            }
        }
    }
    return crossings;
}

// --- containment -----------------------------------------------------------------

bool point_in_region(const PolygonRegion& region, const RPoint& p) {
    if (!point_in_ring(p, region.outer)) return false;
    for (const Ring& hole : region.holes)
        if (point_in_ring(p, hole)) return false;
    return true;
}

bool point_on_boundary(const PolygonRegion& region, const RPoint& p) {
    const auto on_ring = [&](const Ring& ring) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            if (rpoint_on_segment(p, ring[i], ring[(i + 1) % ring.size()])) return true;
        return false;
    };
    if (on_ring(region.outer)) return true;
    for (const Ring& hole : region.holes)
        if (on_ring(hole)) return true;
    return false;
}

} // namespace pierce::geom
