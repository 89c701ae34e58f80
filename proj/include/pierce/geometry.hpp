#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pierce/numeric.hpp"

namespace pierce::geom {

// Input vertices are integers; every derived point (boundary crossings,
// face representatives) is an exact rational. |x|,|y| <= COORD_LIMIT keeps
// the integer predicates inside __int128.
inline constexpr std::int64_t COORD_LIMIT = 1'000'000'000;

struct IPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const IPoint&, const IPoint&) = default;
    friend auto operator<=>(const IPoint&, const IPoint&) = default;
};

struct RPoint {
    Rational x;
    Rational y;
    friend bool operator==(const RPoint&, const RPoint&) = default;
};

bool lex_less(const RPoint& a, const RPoint& b);

// Closed polyline: consecutive vertices are edges, the last wraps to the
// first. Rings never repeat the first vertex at the end.
using Ring = std::vector<IPoint>;

struct PolygonRegion {
    std::string name;
    Ring outer;              // simple, counter-clockwise
    std::vector<Ring> holes; // simple, clockwise, strictly inside outer
    friend bool operator==(const PolygonRegion&, const PolygonRegion&) = default;
};

struct RegionFamily {
    std::string name;
    std::vector<PolygonRegion> regions; // names unique
    friend bool operator==(const RegionFamily&, const RegionFamily&) = default;
};

enum class ViolationKind {
    OverlappingEdges,
    BoundaryThroughVertex,
    ThreeBoundariesAtPoint,
    TangentialContact,
};

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    RPoint where;
    std::vector<int> regions; // indices into the family, ascending
};

struct GeneralPositionReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Exact sign of the cross product (b-a) x (c-a): 1 left turn, -1 right, 0 collinear.
int orient(const IPoint& a, const IPoint& b, const IPoint& c);

// p lies on the closed segment [a, b].
bool on_segment(const IPoint& p, const IPoint& a, const IPoint& b);

// The segments cross transversally in both interiors.
bool proper_crossing(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                     const IPoint& b2);

// Exact crossing point of two properly crossing segments.
RPoint segment_crossing(const IPoint& a1, const IPoint& a2, const IPoint& b1,
                        const IPoint& b2);

// Twice the signed ring area; positive for counter-clockwise rings.
BigInt signed_area2(const Ring& ring);

// Throws MalformedRegion unless the region meets all of its invariants.
void validate_region(const PolygonRegion& region);

// validate_region for every member plus unique names. Throws MalformedRegion.
void validate_family(const RegionFamily& family);

// Strict general position: pairwise boundary intersections are transversal
// crossings at finitely many points, never at a polygon vertex, and no
// point lies on three or more boundaries. Throws MalformedRegion when a
// region fails its own invariants.
GeneralPositionReport check_general_position(const RegionFamily& family);

std::string describe(const RegionFamily& family, const Violation& violation);

// Number of transversal crossing points of two simple closed polygonal
// curves. Throws Degenerate when the curves coincide along a segment or
// touch at a vertex (including tangential contact).
int crossing_parity(const Ring& a, const Ring& b);

// Containment test for points that avoid the region boundary: inside the
// outer ring and outside every hole. Exact.
bool point_in_region(const PolygonRegion& region, const RPoint& p);

// p lies on some boundary edge of the region.
bool point_on_boundary(const PolygonRegion& region, const RPoint& p);

} // namespace pierce::geom
