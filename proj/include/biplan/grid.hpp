#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "biplan/freespace.hpp"

namespace biplan {

struct GridLine {
    Scalar coord;
    int level = 0;

    friend bool operator==(const GridLine&, const GridLine&) = default;
};

/// Sorted, deduplicated line coordinates; each keeps its minimum level.
struct GridLines {
    std::vector<GridLine> horizontal;  // y = coord
    std::vector<GridLine> vertical;    // x = coord

    /// Adds a line unless present; a present line keeps the smaller level.
    void add_horizontal(const Scalar& y, int level);
    void add_vertical(const Scalar& x, int level);
    bool has_horizontal(const Scalar& y) const;
    bool has_vertical(const Scalar& x) const;
    /// Level of the line at coord, or -1.
    int horizontal_level(const Scalar& y) const;
    int vertical_level(const Scalar& x) const;
};

/// i-lines for i = 0..max_level seeded by the boundary edges of f and by the
/// coordinates of the special points.
GridLines compute_ilines(const FreeSpace& f, std::span<const Point> specials, int max_level = 2);

enum Direction { Right = 0, Up = 1, Left = 2, Down = 3 };

inline Direction opposite(Direction d) { return static_cast<Direction>((d + 2) % 4); }

struct GridGraph {
    std::vector<Scalar> xs;  // vertical line coordinates (columns)
    std::vector<Scalar> ys;  // horizontal line coordinates (rows)
    std::vector<Point> points;
    std::vector<int> row;
    std::vector<int> col;
    /// Indexed by Direction; -1 when there is no neighbour.
    std::vector<std::array<int, 4>> neighbors;
    /// Point index at (row, col), or -1; size ys.size() * xs.size().
    std::vector<int> index_at;

    std::size_t edge_count() const;
};

GridGraph build_grid_graph(const FreeSpace& f, const GridLines& lines);

/// Index of the grid point equal to p, if any.
std::optional<int> locate_grid_point(const GridGraph& g, const Point& p);

}  // namespace biplan
