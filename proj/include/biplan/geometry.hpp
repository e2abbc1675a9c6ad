#pragma once

#include <compare>
#include <string>
#include <vector>

#include "biplan/scalar.hpp"

namespace biplan {

struct Point {
    Scalar x;
    Scalar y;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);

std::string to_string(const Point& p);

/// Axis-parallel segment; a == b is a legal zero-length segment.
struct AxisSegment {
    Point a;
    Point b;

    bool is_axis_parallel() const { return a.x == b.x || a.y == b.y; }
    friend bool operator==(const AxisSegment&, const AxisSegment&) = default;
};

/// Closed axis-aligned box [x_lo, x_hi] x [y_lo, y_hi]; degenerate boxes are allowed.
struct Rect {
    Scalar x_lo, x_hi, y_lo, y_hi;

    bool valid() const { return x_lo <= x_hi && y_lo <= y_hi; }
    bool degenerate() const { return x_lo == x_hi || y_lo == y_hi; }
    bool contains(const Point& p) const {
        return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
    }
    Scalar area() const { return (x_hi - x_lo) * (y_hi - y_lo); }
    Rect grown(const Scalar& r) const { return {x_lo - r, x_hi + r, y_lo - r, y_hi + r}; }
    Rect transposed() const { return {y_lo, y_hi, x_lo, x_hi}; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

using Ring = std::vector<Point>;

/// Rectilinear polygon with holes. Orientation of the rings is not significant.
struct RectilinearPolygon {
    Ring outer;
    std::vector<Ring> holes;

    std::size_t vertex_count() const;
    friend bool operator==(const RectilinearPolygon&, const RectilinearPolygon&) = default;
};

Scalar linf_dist(const Point& p, const Point& q);
Scalar l1_dist(const Point& p, const Point& q);

/// Chebyshev distance between two closed boxes (zero when they intersect).
Scalar linf_box_dist(const Rect& a, const Rect& b);

Rect bounding_box(const AxisSegment& s);

/// Smallest value of max(|dx(l)|, |dy(l)|) for l in [0,1], where the relative
/// displacement moves linearly from `from` to `to`. Also reports the argmin.
struct LinfMinimum {
    Scalar value;
    Scalar at;  ///< parameter in [0,1]
};
LinfMinimum min_linf_along(const Point& from, const Point& to);

/// Total l1 length of a polyline.
Scalar polyline_length(const std::vector<Point>& pts);

}  // namespace biplan
