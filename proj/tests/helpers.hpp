#pragma once

#include <initializer_list>
#include <utility>

#include "biplan/freespace.hpp"

namespace biplan::test {

inline Scalar q(std::int64_t n, std::int64_t d = 1) { return Scalar(n, d); }
inline Point pt(const Scalar& x, const Scalar& y) { return {x, y}; }

inline Ring ring(std::initializer_list<std::pair<Scalar, Scalar>> pts) {
    Ring r;
    for (const auto& [x, y] : pts) r.push_back({x, y});
    return r;
}

inline Rect box(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1) { return {x0, x1, y0, y1}; }

inline RectilinearPolygon rect_polygon(const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1) {
    return {ring({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}), {}};
}

inline FreeSpace free_of(const RectilinearPolygon& poly) { return compute_free_space(Workspace(poly)); }

}  // namespace biplan::test
