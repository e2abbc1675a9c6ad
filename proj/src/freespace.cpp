#include "biplan/freespace.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "biplan/error.hpp"

namespace biplan {

namespace {

enum class Orientation { Horizontal, Vertical };

Orientation orientation(const Point& a, const Point& b) {
    return a.y == b.y ? Orientation::Horizontal : Orientation::Vertical;
}

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::InvalidWorkspace, why); }

/// Drops vertices where the ring continues straight on; rejects reversals.
Ring normalize_ring(const Ring& ring, const char* name) {
    if (ring.size() < 4) invalid(std::string(name) + " ring needs at least 4 vertices");
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if (a == b) invalid(std::string(name) + " ring has a zero-length edge at " + to_string(a));
        if (a.x != b.x && a.y != b.y) {
            invalid(std::string(name) + " ring edge " + to_string(a) + "-" + to_string(b) + " is not axis-parallel");
        }
    }
    Ring out;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& prev = ring[(i + n - 1) % n];
        const Point& cur = ring[i];
        const Point& next = ring[(i + 1) % n];
        if (orientation(prev, cur) == orientation(cur, next)) {
            const bool reverses = orientation(prev, cur) == Orientation::Horizontal
                                      ? ((cur.x - prev.x).sign() != (next.x - cur.x).sign())
                                      : ((cur.y - prev.y).sign() != (next.y - cur.y).sign());
            if (reverses) invalid(std::string(name) + " ring has a dangling edge at " + to_string(cur));
            continue;
        }
        out.push_back(cur);
    }
    if (out.size() < 4) invalid(std::string(name) + " ring is degenerate");
    return out;
}

bool segments_touch(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
    const Rect ra{min(a0.x, a1.x), max(a0.x, a1.x), min(a0.y, a1.y), max(a0.y, a1.y)};
    const Rect rb{min(b0.x, b1.x), max(b0.x, b1.x), min(b0.y, b1.y), max(b0.y, b1.y)};
    return linf_box_dist(ra, rb).sign() == 0;
}

void check_simple(const Ring& ring, const char* name) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent through the wrap
            if (segments_touch(ring[i], ring[(i + 1) % n], ring[j], ring[(j + 1) % n])) {
                invalid(std::string(name) + " ring self-intersects near " + to_string(ring[i]));
            }
        }
    }
}

void check_disjoint(const Ring& r1, const Ring& r2) {
    for (std::size_t i = 0; i < r1.size(); ++i) {
        for (std::size_t j = 0; j < r2.size(); ++j) {
            if (segments_touch(r1[i], r1[(i + 1) % r1.size()], r2[j], r2[(j + 1) % r2.size()])) {
                invalid("rings touch or cross near " + to_string(r1[i]));
            }
        }
    }
}

/// Even-odd test against one ring; boundary points report true.
bool ring_contains(const Ring& ring, const Point& p, bool* on_boundary) {
    bool inside = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        const Rect box{min(a.x, b.x), max(a.x, b.x), min(a.y, b.y), max(a.y, b.y)};
        if (box.contains(p)) {
            if (on_boundary) *on_boundary = true;
            return true;
        }
        if (a.x == b.x && a.x > p.x) {
            const Scalar& lo = min(a.y, b.y);
            const Scalar& hi = max(a.y, b.y);
            if (lo <= p.y && p.y < hi) inside = !inside;
        }
    }
    if (on_boundary) *on_boundary = false;
    return inside;
}

RectSet polygon_region(const RectilinearPolygon& poly) {
    std::vector<const Ring*> rings{&poly.outer};
    for (const auto& h : poly.holes) rings.push_back(&h);
    std::vector<Scalar> xs;
    for (const Ring* r : rings) {
        for (const auto& p : *r) xs.push_back(p.x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rect> pieces;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const Scalar mid = (xs[i] + xs[i + 1]) / Scalar(2);
        std::vector<Scalar> ys;
        for (const Ring* r : rings) {
            for (std::size_t k = 0; k < r->size(); ++k) {
                const Point& a = (*r)[k];
                const Point& b = (*r)[(k + 1) % r->size()];
                if (a.y == b.y && min(a.x, b.x) < mid && mid < max(a.x, b.x)) ys.push_back(a.y);
            }
        }
        std::sort(ys.begin(), ys.end());
        for (std::size_t k = 0; k + 1 < ys.size(); k += 2) pieces.push_back({xs[i], xs[i + 1], ys[k], ys[k + 1]});
    }
    return RectSet::from_rects(pieces);
}

/// Boundary pieces perpendicular to the sections of `r`: for each slab the
/// interval ends, for each line section the interval ends as single points.
/// Returns segments in r's own coordinates as (y, x_lo, x_hi).
std::vector<AxisSegment> boundary_edges(const RectSet& r, bool transposed) {
    std::map<Scalar, IntervalSet> by_level;
    const auto& xs = r.breakpoints();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (const auto& iv : r.line_sections()[i]) {
            by_level[iv.lo].push_back({xs[i], xs[i]});
            by_level[iv.hi].push_back({xs[i], xs[i]});
        }
        if (i + 1 < xs.size()) {
            for (const auto& iv : r.slab_sections()[i]) {
                by_level[iv.lo].push_back({xs[i], xs[i + 1]});
                by_level[iv.hi].push_back({xs[i], xs[i + 1]});
            }
        }
    }
    std::vector<AxisSegment> out;
    for (auto& [level, spans] : by_level) {
        for (const auto& iv : intervals::normalized(std::move(spans))) {
            if (transposed) out.push_back({{level, iv.lo}, {level, iv.hi}});
            else out.push_back({{iv.lo, level}, {iv.hi, level}});
        }
    }
    return out;
}

void check_free_segments(const RectSet& r, const char* axis) {
    auto check = [&](const IntervalSet& s) {
        for (std::size_t k = 1; k < s.size(); ++k) {
            if (s[k].lo - s[k - 1].hi <= Scalar(1)) {
                throw std::logic_error(std::string("free space has a gap of length <= 1 along ") + axis +
                                       " between " + s[k - 1].hi.str() + " and " + s[k].lo.str());
            }
        }
    };
    for (const auto& s : r.line_sections()) check(s);
    for (const auto& s : r.slab_sections()) check(s);
}

}  // namespace

Workspace::Workspace(RectilinearPolygon polygon) {
    polygon_.outer = normalize_ring(polygon.outer, "outer");
    for (const auto& h : polygon.holes) polygon_.holes.push_back(normalize_ring(h, "hole"));
    check_simple(polygon_.outer, "outer");
    for (const auto& h : polygon_.holes) check_simple(h, "hole");
    for (std::size_t i = 0; i < polygon_.holes.size(); ++i) {
        const Ring& h = polygon_.holes[i];
        check_disjoint(polygon_.outer, h);
        bool on_boundary = false;
        if (!ring_contains(polygon_.outer, h.front(), &on_boundary) || on_boundary) {
            invalid("hole " + std::to_string(i) + " is not inside the outer ring");
        }
        for (std::size_t j = i + 1; j < polygon_.holes.size(); ++j) {
            const Ring& g = polygon_.holes[j];
            check_disjoint(h, g);
            if (ring_contains(g, h.front(), nullptr) || ring_contains(h, g.front(), nullptr)) {
                invalid("holes " + std::to_string(i) + " and " + std::to_string(j) + " are nested");
            }
        }
    }
    region_ = polygon_region(polygon_);
}

bool Workspace::contains(const Point& p) const {
    bool on_boundary = false;
    if (!ring_contains(polygon_.outer, p, &on_boundary)) return false;
    if (on_boundary) return true;
    for (const auto& h : polygon_.holes) {
        if (ring_contains(h, p, &on_boundary) && !on_boundary) return false;
    }
    return true;
}

FreeSpace::FreeSpace(RectSet region) : region_(std::move(region)), region_t_(region_.transposed()) {
    horizontal_edges_ = boundary_edges(region_, false);
    vertical_edges_ = boundary_edges(region_t_, true);
    check_free_segments(region_, "a vertical line");
    check_free_segments(region_t_, "a horizontal line");
}

FreeSpace compute_free_space(const Workspace& w) {
    return FreeSpace(erode_by_square(w.region(), Scalar(1, 2)));
}

bool contains_point(const FreeSpace& f, const Point& p) { return f.region().contains(p); }

bool segment_in_free(const FreeSpace& f, const Point& p, const Point& q) {
    if (p.y == q.y && p.x != q.x) return f.transposed_region().contains_segment({p.y, p.x}, {q.y, q.x});
    return f.region().contains_segment(p, q);
}

bool segment_in_free(const FreeSpace& f, const AxisSegment& s) { return segment_in_free(f, s.a, s.b); }

bool is_free_config(const FreeSpace& f, const Config& c) {
    return contains_point(f, c.a) && contains_point(f, c.b) && linf_dist(c.a, c.b) >= Scalar(1);
}

}  // namespace biplan
