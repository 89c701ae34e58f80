#pragma once

#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pierce/geometry.hpp"

namespace pierce::geom {

// Which regions contain a face, one bit per family index.
using Signature = boost::dynamic_bitset<>;

struct Face {
    Signature signature;
    RPoint representative;      // strictly interior to the face
    std::vector<int> adjacent;  // faces sharing a boundary edge fragment
    bool bounded = true;
};

// Planar subdivision induced by all region boundaries, built with exact
// rational arithmetic via a vertical (trapezoidal) decomposition. The
// input is sheared by x' = x + y/M beforehand so no wall is vertical;
// the shear is undone in every reported point.
class Arrangement {
public:
    // Throws GeneralPositionViolation when the family fails the strict
    // general-position check, MalformedRegion when a region is invalid.
    static Arrangement build(const RegionFamily& family);

    const std::vector<Face>& faces() const { return faces_; }
    int unbounded_face() const { return unbounded_; }
    int region_count() const { return region_count_; }

    // Index of the face containing p, or -1 when p lies on a boundary.
    int locate(const RPoint& p) const;

private:
    struct Wall {
        RPoint a, b;   // sheared endpoints, a.x < b.x
        int region;
        Rational y_at(const Rational& x) const;
    };
    struct Slab {
        std::vector<int> walls;      // indices into walls_, bottom to top
        std::vector<int> trapezoids; // bottom to top, walls.size() + 1 entries
    };

    std::vector<Face> faces_;
    int unbounded_ = -1;
    int region_count_ = 0;

    std::vector<Wall> walls_;
    std::vector<Rational> events_;     // sheared x cuts, strictly increasing
    std::vector<Slab> slabs_;          // one per event gap
    std::vector<int> trapezoid_face_;
    int left_halfplane_trapezoid_ = -1;
    std::int64_t shear_m_ = 1;
};

// Connected components of the regularized difference region_i \ region_j:
// faces whose signature contains i but not j, connected along shared edges.
// 0 iff region_i is covered by region_j.
int difference_components(const Arrangement& arrangement, int i, int j);

// True iff every ordered pair of distinct regions has a connected
// difference; otherwise lists every offending ordered pair (i, j).
std::pair<bool, std::vector<std::pair<int, int>>>
check_non_piercing(const Arrangement& arrangement);

std::pair<bool, std::vector<std::pair<int, int>>>
check_non_piercing(const RegionFamily& family);

} // namespace pierce::geom
