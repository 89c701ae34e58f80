#include "pierce/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "pierce/errors.hpp"

namespace pierce::geom {

namespace {

struct InputSegment {
    IPoint a, b;
    int region;
};

std::vector<InputSegment> collect_segments(const RegionFamily& family) {
    std::vector<InputSegment> segments;
    const auto add_ring = [&](const Ring& ring, int region) {
        for (std::size_t i = 0; i < ring.size(); ++i)
            segments.push_back({ring[i], ring[(i + 1) % ring.size()], region});
    };
    for (std::size_t r = 0; r < family.regions.size(); ++r) {
        add_ring(family.regions[r].outer, static_cast<int>(r));
        for (const Ring& hole : family.regions[r].holes)
            add_ring(hole, static_cast<int>(r));
    }
    return segments;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// y bound of a trapezoid opening; -1 below every wall, +1 above.
struct YBound {
    int inf = 0; // -1, 0 (finite), +1
    Rational value;
};

bool ybound_less(const YBound& a, const YBound& b) {
    if (a.inf != b.inf) return a.inf < b.inf;
    if (a.inf != 0) return false;
    return a.value < b.value;
}

} // namespace

Rational Arrangement::Wall::y_at(const Rational& x) const {
    return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

Arrangement Arrangement::build(const RegionFamily& family) {
    const GeneralPositionReport gp = check_general_position(family);
    if (!gp.ok) {
        std::string message = "family violates general position: ";
        message += describe(family, gp.violations.front());
        if (gp.violations.size() > 1)
            message += " (and " + std::to_string(gp.violations.size() - 1) + " more)";
        throw GeneralPositionViolation(message);
    }

    Arrangement arr;
    arr.region_count_ = static_cast<int>(family.regions.size());
    const std::vector<InputSegment> segments = collect_segments(family);

    if (segments.empty()) {
        Face outside;
        outside.signature = Signature(arr.region_count_);
        outside.representative = {Rational(0), Rational(0)};
        outside.bounded = false;
        arr.faces_.push_back(std::move(outside));
        arr.unbounded_ = 0;
        arr.trapezoid_face_ = {0};
        arr.left_halfplane_trapezoid_ = 0;
        return arr;
    }

    // Shear x' = x + y/M. M exceeds every |dy|, so every segment acquires
    // a nonzero x' extent and no wall is vertical.
    std::int64_t max_dy = 0;
    for (const InputSegment& s : segments)
        max_dy = std::max(max_dy, std::abs(s.b.y - s.a.y));
    const std::int64_t M = max_dy + 1;
    arr.shear_m_ = M;
    const auto shear = [M](const RPoint& p) -> RPoint {
        return {p.x + p.y / M, p.y};
    };
    const auto shear_int = [M](const IPoint& p) -> RPoint {
        return {Rational(BigInt(p.x) * M + p.y, BigInt(M)), Rational(p.y)};
    };

    // Events: sheared x of every vertex and of every pairwise boundary
    // crossing. Crossings only occur between different regions.
    std::vector<Rational> events;
    for (const InputSegment& s : segments) {
        events.push_back(shear_int(s.a).x);
        events.push_back(shear_int(s.b).x);
    }
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            if (segments[i].region == segments[j].region) continue;
            if (!proper_crossing(segments[i].a, segments[i].b, segments[j].a,
                                 segments[j].b))
                continue;
            events.push_back(
                shear(segment_crossing(segments[i].a, segments[i].b, segments[j].a,
                                       segments[j].b))
                    .x);
        }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    arr.events_ = events;

    for (const InputSegment& s : segments) {
        Wall wall;
        wall.a = shear_int(s.a);
        wall.b = shear_int(s.b);
        wall.region = s.region;
        if (wall.b.x < wall.a.x) std::swap(wall.a, wall.b);
        if (wall.a.x == wall.b.x)
            throw std::logic_error("sheared wall is vertical");
        arr.walls_.push_back(std::move(wall));
    }

    // Distribute walls over the slabs they span.
    arr.slabs_.assign(events.size() - 1, {});
    const auto event_index = [&events](const Rational& x) {
        const auto it = std::lower_bound(events.begin(), events.end(), x);
        return static_cast<std::size_t>(it - events.begin());
    };
    for (std::size_t w = 0; w < arr.walls_.size(); ++w) {
        const std::size_t lo = event_index(arr.walls_[w].a.x);
        const std::size_t hi = event_index(arr.walls_[w].b.x);
        for (std::size_t k = lo; k < hi; ++k)
            arr.slabs_[k].walls.push_back(static_cast<int>(w));
    }

    // Sort walls within each slab by height at the slab midpoint. Ties are
    // impossible: they would mean a crossing or an overlap inside the slab.
    for (std::size_t k = 0; k < arr.slabs_.size(); ++k) {
        Slab& slab = arr.slabs_[k];
        const Rational xm = (events[k] + events[k + 1]) / 2;
        std::vector<std::pair<Rational, int>> order;
        order.reserve(slab.walls.size());
        for (int w : slab.walls) order.emplace_back(arr.walls_[w].y_at(xm), w);
        std::sort(order.begin(), order.end());
        for (std::size_t i = 1; i < order.size(); ++i)
            if (order[i].first == order[i - 1].first)
                throw std::logic_error("walls coincide inside a slab");
        for (std::size_t i = 0; i < order.size(); ++i) slab.walls[i] = order[i].second;
    }

    // Trapezoid ids in reading order: left half-plane, slabs left to right
    // (bottom to top inside a slab), right half-plane.
    int next_trapezoid = 0;
    arr.left_halfplane_trapezoid_ = next_trapezoid++;
    for (Slab& slab : arr.slabs_) {
        slab.trapezoids.resize(slab.walls.size() + 1);
        for (int& t : slab.trapezoids) t = next_trapezoid++;
    }
    const int right_halfplane = next_trapezoid++;
    const int trapezoid_count = next_trapezoid;

    // Containment signature per trapezoid: crossing one wall toggles exactly
    // that wall's region, and the bottom of every slab lies outside all.
    std::vector<Signature> trap_signature(trapezoid_count,
                                          Signature(arr.region_count_));
    for (const Slab& slab : arr.slabs_) {
        Signature current(arr.region_count_);
        for (std::size_t level = 0; level < slab.walls.size(); ++level) {
            current.flip(arr.walls_[slab.walls[level]].region);
            trap_signature[slab.trapezoids[level + 1]] = current;
        }
        if (trap_signature[slab.trapezoids.back()].any())
            throw std::logic_error("signature cascade does not close");
    }

    // Merge trapezoids across each event line wherever their openings share
    // an interval of positive length.
    UnionFind uf(trapezoid_count);
    const auto openings = [&](std::size_t slab_index,
                              const Rational& x) -> std::vector<YBound> {
        // boundaries between consecutive openings of this slab at x
        std::vector<YBound> cuts;
        for (int w : arr.slabs_[slab_index].walls)
            cuts.push_back({0, arr.walls_[w].y_at(x)});
        for (std::size_t i = 1; i < cuts.size(); ++i)
            if (cuts[i].value < cuts[i - 1].value)
                throw std::logic_error("wall order flips at an event");
        return cuts;
    };
    for (std::size_t e = 0; e < events.size(); ++e) {
        std::vector<YBound> left_cuts, right_cuts;
        std::vector<int> left_traps, right_traps;
        if (e == 0) {
            left_traps = {arr.left_halfplane_trapezoid_};
        } else {
            left_cuts = openings(e - 1, events[e]);
            left_traps = arr.slabs_[e - 1].trapezoids;
        }
        if (e + 1 == events.size()) {
            right_traps = {right_halfplane};
        } else {
            right_cuts = openings(e, events[e]);
            right_traps = arr.slabs_[e].trapezoids;
        }
        const auto low = [](const std::vector<YBound>& cuts, std::size_t i) {
            return i == 0 ? YBound{-1, Rational()} : cuts[i - 1];
        };
        const auto high = [](const std::vector<YBound>& cuts, std::size_t i) {
            return i == cuts.size() ? YBound{1, Rational()} : cuts[i];
        };
        std::size_t i = 0, j = 0;
        while (i < left_traps.size() && j < right_traps.size()) {
            const YBound lo = std::max(low(left_cuts, i), low(right_cuts, j),
                                       ybound_less);
            const YBound hi = std::min(high(left_cuts, i), high(right_cuts, j),
                                       ybound_less);
            if (ybound_less(lo, hi)) uf.unite(left_traps[i], right_traps[j]);
            const YBound hi_l = high(left_cuts, i);
            const YBound hi_r = high(right_cuts, j);
            if (ybound_less(hi_l, hi_r)) {
                ++i;
            } else if (ybound_less(hi_r, hi_l)) {
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }

    // Faces in order of their first trapezoid.
    std::map<int, int> root_to_face;
    arr.trapezoid_face_.assign(trapezoid_count, -1);
    for (int t = 0; t < trapezoid_count; ++t) {
        const int root = uf.find(t);
        auto [it, inserted] = root_to_face.try_emplace(root,
                                                       static_cast<int>(arr.faces_.size()));
        if (inserted) {
            Face face;
            face.signature = trap_signature[t];
            arr.faces_.push_back(std::move(face));
        } else if (arr.faces_[it->second].signature != trap_signature[t]) {
            throw std::logic_error("face united from differing signatures");
        }
        arr.trapezoid_face_[t] = it->second;
    }

    // Representative: the center of the face's first trapezoid, unsheared.
    std::vector<bool> face_done(arr.faces_.size(), false);
    const auto set_representative = [&](int trapezoid, const RPoint& sheared_point) {
        const int face = arr.trapezoid_face_[trapezoid];
        if (face_done[face]) return;
        face_done[face] = true;
        arr.faces_[face].representative = {sheared_point.x - sheared_point.y / M,
                                           sheared_point.y};
    };
    set_representative(arr.left_halfplane_trapezoid_,
                       {events.front() - 1, Rational(0)});
    for (std::size_t k = 0; k < arr.slabs_.size(); ++k) {
        const Slab& slab = arr.slabs_[k];
        const Rational xm = (events[k] + events[k + 1]) / 2;
        std::vector<Rational> ys;
        ys.reserve(slab.walls.size());
        for (int w : slab.walls) ys.push_back(arr.walls_[w].y_at(xm));
        for (std::size_t level = 0; level < slab.trapezoids.size(); ++level) {
            Rational y;
            if (ys.empty())
                y = 0;
            else if (level == 0)
                y = ys.front() - 1;
            else if (level == ys.size())
                y = ys.back() + 1;
            else
                y = (ys[level - 1] + ys[level]) / 2;
            set_representative(slab.trapezoids[level], {xm, y});
        }
    }
    set_representative(right_halfplane, {events.back() + 1, Rational(0)});

    // Bounded flags: any trapezoid with an open side is in the outer face.
    std::vector<bool> unbounded(arr.faces_.size(), false);
    unbounded[arr.trapezoid_face_[arr.left_halfplane_trapezoid_]] = true;
    unbounded[arr.trapezoid_face_[right_halfplane]] = true;
    for (const Slab& slab : arr.slabs_) {
        unbounded[arr.trapezoid_face_[slab.trapezoids.front()]] = true;
        unbounded[arr.trapezoid_face_[slab.trapezoids.back()]] = true;
    }
    int unbounded_count = 0;
    for (std::size_t f = 0; f < arr.faces_.size(); ++f) {
        arr.faces_[f].bounded = !unbounded[f];
        if (unbounded[f]) {
            arr.unbounded_ = static_cast<int>(f);
            ++unbounded_count;
        }
    }
    if (unbounded_count != 1)
        throw std::logic_error("expected exactly one unbounded face");
    if (arr.faces_[arr.unbounded_].signature.any())
        throw std::logic_error("unbounded face has a non-empty signature");

    // Adjacency: consecutive trapezoids in a slab share a wall fragment.
    std::set<std::pair<int, int>> edges;
    for (const Slab& slab : arr.slabs_)
        for (std::size_t level = 0; level + 1 < slab.trapezoids.size(); ++level) {
            const int fa = arr.trapezoid_face_[slab.trapezoids[level]];
            const int fb = arr.trapezoid_face_[slab.trapezoids[level + 1]];
            if (fa == fb) throw std::logic_error("wall does not separate faces");
            edges.insert({std::min(fa, fb), std::max(fa, fb)});
        }
    for (const auto& [fa, fb] : edges) {
        arr.faces_[fa].adjacent.push_back(fb);
        arr.faces_[fb].adjacent.push_back(fa);
    }
    for (Face& face : arr.faces_)
        std::sort(face.adjacent.begin(), face.adjacent.end());

    return arr;
}

int Arrangement::locate(const RPoint& p) const {
    if (events_.empty()) return trapezoid_face_.empty() ? -1 : trapezoid_face_[0];
    const Rational sx = p.x + p.y / shear_m_;
    if (sx < events_.front() || sx > events_.back())
        return unbounded_;

    const auto it = std::lower_bound(events_.begin(), events_.end(), sx);
    const std::size_t at = static_cast<std::size_t>(it - events_.begin());

    const auto locate_in_slab = [&](std::size_t slab_index,
                                    const Rational& x) -> int {
        const Slab& slab = slabs_[slab_index];
        std::size_t below = 0;
        for (int w : slab.walls) {
            const Rational y = walls_[w].y_at(x);
            if (y == p.y) return -1; // on a boundary segment
            if (y < p.y) ++below;
        }
        return trapezoid_face_[slab.trapezoids[below]];
    };

    if (it != events_.end() && *it == sx) {
        // On an event line: boundary points are wall hits in either
        // neighbouring slab; interior points land in a merged face.
        if (at > 0) {
            const int f = locate_in_slab(at - 1, sx);
            if (f < 0) return -1;
            if (at >= slabs_.size()) return f;
            const int g = locate_in_slab(at, sx);
            return g < 0 ? -1 : g;
        }
        return locate_in_slab(at, sx);
    }
    return locate_in_slab(at - 1, sx);
}

int difference_components(const Arrangement& arrangement, int i, int j) {
    const int n = arrangement.region_count();
    if (i < 0 || i >= n || j < 0 || j >= n || i == j)
        throw InvalidIndex("difference_components requires two distinct region indices");
    const auto& faces = arrangement.faces();
    std::vector<bool> in_difference(faces.size(), false);
    for (std::size_t f = 0; f < faces.size(); ++f)
        in_difference[f] = faces[f].signature.test(i) && !faces[f].signature.test(j);
    int components = 0;
    std::vector<bool> seen(faces.size(), false);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (!in_difference[f] || seen[f]) continue;
        ++components;
        std::queue<int> queue;
        queue.push(static_cast<int>(f));
        seen[f] = true;
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop();
            for (int next : faces[cur].adjacent)
                if (in_difference[next] && !seen[next]) {
                    seen[next] = true;
                    queue.push(next);
                }
        }
    }
    return components;
}

std::pair<bool, std::vector<std::pair<int, int>>>
check_non_piercing(const Arrangement& arrangement) {
    std::vector<std::pair<int, int>> offenders;
    const int n = arrangement.region_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (difference_components(arrangement, i, j) >= 2)
                offenders.emplace_back(i, j);
        }
    return {offenders.empty(), offenders};
}

std::pair<bool, std::vector<std::pair<int, int>>>
check_non_piercing(const RegionFamily& family) {
    return check_non_piercing(Arrangement::build(family));
}

} // namespace pierce::geom
