#include "biplan/geometry.hpp"

#include <array>
#include <optional>

namespace biplan {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

std::string to_string(const Point& p) { return "(" + p.x.str() + "," + p.y.str() + ")"; }

std::size_t RectilinearPolygon::vertex_count() const {
    std::size_t n = outer.size();
    for (const auto& h : holes) n += h.size();
    return n;
}

Scalar linf_dist(const Point& p, const Point& q) { return max(abs(p.x - q.x), abs(p.y - q.y)); }

Scalar l1_dist(const Point& p, const Point& q) { return abs(p.x - q.x) + abs(p.y - q.y); }

namespace {

Scalar interval_gap(const Scalar& lo1, const Scalar& hi1, const Scalar& lo2, const Scalar& hi2) {
    if (lo2 > hi1) return lo2 - hi1;
    if (lo1 > hi2) return lo1 - hi2;
    return Scalar(0);
}

}  // namespace

Scalar linf_box_dist(const Rect& a, const Rect& b) {
    return max(interval_gap(a.x_lo, a.x_hi, b.x_lo, b.x_hi), interval_gap(a.y_lo, a.y_hi, b.y_lo, b.y_hi));
}

Rect bounding_box(const AxisSegment& s) {
    return {min(s.a.x, s.b.x), max(s.a.x, s.b.x), min(s.a.y, s.b.y), max(s.a.y, s.b.y)};
}

LinfMinimum min_linf_along(const Point& from, const Point& to) {
    // max(|dx|,|dy|) is convex in the parameter, so the minimum sits at an
    // endpoint or where one of the four linear pieces changes sign/dominance.
    const Point d = to - from;
    auto value_at = [&](const Scalar& l) {
        return max(abs(from.x + l * d.x), abs(from.y + l * d.y));
    };
    std::vector<Scalar> candidates{Scalar(0), Scalar(1)};
    auto add_root = [&](const Scalar& c0, const Scalar& c1) {
        // root of c0 + l*c1 = 0
        if (c1.sign() == 0) return;
        Scalar l = -c0 / c1;
        if (l.sign() >= 0 && l <= Scalar(1)) candidates.push_back(l);
    };
    add_root(from.x, d.x);
    add_root(from.y, d.y);
    add_root(from.x - from.y, d.x - d.y);
    add_root(from.x + from.y, d.x + d.y);

    LinfMinimum best{value_at(candidates[0]), candidates[0]};
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        Scalar v = value_at(candidates[i]);
        if (v < best.value || (v == best.value && candidates[i] < best.at)) best = {std::move(v), candidates[i]};
    }
    return best;
}

Scalar polyline_length(const std::vector<Point>& pts) {
    Scalar total(0);
    for (std::size_t i = 1; i < pts.size(); ++i) total += l1_dist(pts[i - 1], pts[i]);
    return total;
}

}  // namespace biplan
