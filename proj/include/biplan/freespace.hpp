#pragma once

#include <vector>

#include "biplan/geometry.hpp"
#include "biplan/rect_set.hpp"

namespace biplan {

/// A validated rectilinear workspace. Construction throws
/// Error(InvalidWorkspace) for non-rectilinear, self-intersecting or
/// dangling-edge input, or holes that are not strictly inside the outer ring.
class Workspace {
public:
    explicit Workspace(RectilinearPolygon polygon);

    const RectilinearPolygon& polygon() const { return polygon_; }
    std::size_t n() const { return polygon_.vertex_count(); }

    /// The closed region bounded by the polygon.
    const RectSet& region() const { return region_; }

    /// Closed-set membership of p in the workspace, by ray casting.
    bool contains(const Point& p) const;

private:
    RectilinearPolygon polygon_;
    RectSet region_;
};

struct Config {
    Point a;
    Point b;

    friend bool operator==(const Config&, const Config&) = default;
};

/// Single-robot free space: centres p with p + [-1/2, 1/2]^2 inside the workspace.
class FreeSpace {
public:
    FreeSpace() = default;
    explicit FreeSpace(RectSet region);

    const RectSet& region() const { return region_; }
    /// The same region with x and y swapped; used for horizontal queries.
    const RectSet& transposed_region() const { return region_t_; }

    /// Maximal axis-parallel pieces of the boundary. Zero-length entries mark
    /// isolated boundary vertices (for instance the ends of a width-one corridor).
    const std::vector<AxisSegment>& horizontal_edges() const { return horizontal_edges_; }
    const std::vector<AxisSegment>& vertical_edges() const { return vertical_edges_; }

    bool empty() const { return region_.empty(); }

private:
    RectSet region_;
    RectSet region_t_;
    std::vector<AxisSegment> horizontal_edges_;
    std::vector<AxisSegment> vertical_edges_;
};

FreeSpace compute_free_space(const Workspace& w);

bool contains_point(const FreeSpace& f, const Point& p);

/// Every point of s lies in F. Works for any straight segment, not only
/// axis-parallel ones.
bool segment_in_free(const FreeSpace& f, const AxisSegment& s);
bool segment_in_free(const FreeSpace& f, const Point& p, const Point& q);

bool is_free_config(const FreeSpace& f, const Config& c);

}  // namespace biplan
