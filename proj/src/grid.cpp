#include "biplan/grid.hpp"

#include <algorithm>

namespace biplan {

namespace {

void add_line(std::vector<GridLine>& lines, const Scalar& c, int level) {
    auto it = std::lower_bound(lines.begin(), lines.end(), c,
                               [](const GridLine& l, const Scalar& v) { return l.coord < v; });
    if (it != lines.end() && it->coord == c) {
        it->level = std::min(it->level, level);
        return;
    }
    lines.insert(it, GridLine{c, level});
}

int line_level(const std::vector<GridLine>& lines, const Scalar& c) {
    auto it = std::lower_bound(lines.begin(), lines.end(), c,
                               [](const GridLine& l, const Scalar& v) { return l.coord < v; });
    return (it != lines.end() && it->coord == c) ? it->level : -1;
}

/// Bulk variant of add_line: sort once, keep the minimum level per coordinate.
std::vector<GridLine> dedup(std::vector<GridLine> v) {
    std::sort(v.begin(), v.end(), [](const GridLine& a, const GridLine& b) {
        return a.coord < b.coord || (a.coord == b.coord && a.level < b.level);
    });
    std::vector<GridLine> out;
    for (auto& l : v) {
        if (out.empty() || out.back().coord != l.coord) out.push_back(std::move(l));
    }
    return out;
}

int find_coord(const std::vector<Scalar>& v, const Scalar& c) {
    auto it = std::lower_bound(v.begin(), v.end(), c);
    return (it != v.end() && *it == c) ? static_cast<int>(it - v.begin()) : -1;
}

}  // namespace

void GridLines::add_horizontal(const Scalar& y, int level) { add_line(horizontal, y, level); }
void GridLines::add_vertical(const Scalar& x, int level) { add_line(vertical, x, level); }
bool GridLines::has_horizontal(const Scalar& y) const { return line_level(horizontal, y) >= 0; }
bool GridLines::has_vertical(const Scalar& x) const { return line_level(vertical, x) >= 0; }
int GridLines::horizontal_level(const Scalar& y) const { return line_level(horizontal, y); }
int GridLines::vertical_level(const Scalar& x) const { return line_level(vertical, x); }

GridLines compute_ilines(const FreeSpace& f, std::span<const Point> specials, int max_level) {
    std::vector<GridLine> hs;
    std::vector<GridLine> vs;
    auto seed = [&](std::vector<GridLine>& out, const Scalar& c) {
        for (int d = 0; d <= max_level; ++d) {
            out.push_back({c + Scalar(d), d});
            if (d > 0) out.push_back({c - Scalar(d), d});
        }
    };
    for (const auto& e : f.horizontal_edges()) seed(hs, e.a.y);
    for (const auto& e : f.vertical_edges()) seed(vs, e.a.x);
    for (const auto& p : specials) {
        seed(hs, p.y);
        seed(vs, p.x);
    }
    return GridLines{dedup(std::move(hs)), dedup(std::move(vs))};
}

std::size_t GridGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& nb : neighbors) n += (nb[Right] >= 0) + (nb[Up] >= 0);
    return n;
}

GridGraph build_grid_graph(const FreeSpace& f, const GridLines& lines) {
    GridGraph g;
    for (const auto& l : lines.vertical) g.xs.push_back(l.coord);
    for (const auto& l : lines.horizontal) g.ys.push_back(l.coord);
    const std::size_t nx = g.xs.size();
    const std::size_t ny = g.ys.size();
    g.index_at.assign(nx * ny, -1);
    if (f.empty()) return g;

    // Column sweep: the F-section of each vertical line gives its grid points
    // and, via interval membership, which consecutive ones are joined.
    std::vector<int> interval_of(nx * ny, -1);
    for (std::size_t c = 0; c < nx; ++c) {
        const IntervalSet& sec = f.region().section_at(g.xs[c]);
        std::size_t k = 0;
        for (std::size_t r = 0; r < ny && k < sec.size(); ++r) {
            while (k < sec.size() && sec[k].hi < g.ys[r]) ++k;
            if (k == sec.size()) break;
            if (sec[k].lo <= g.ys[r]) {
                const int idx = static_cast<int>(g.points.size());
                g.points.push_back({g.xs[c], g.ys[r]});
                g.row.push_back(static_cast<int>(r));
                g.col.push_back(static_cast<int>(c));
                g.neighbors.push_back({-1, -1, -1, -1});
                g.index_at[r * nx + c] = idx;
                interval_of[r * nx + c] = static_cast<int>(k);
            }
        }
        int prev = -1;
        int prev_interval = -1;
        for (std::size_t r = 0; r < ny; ++r) {
            const int idx = g.index_at[r * nx + c];
            if (idx < 0) continue;
            if (prev >= 0 && prev_interval == interval_of[r * nx + c]) {
                g.neighbors[prev][Up] = idx;
                g.neighbors[idx][Down] = prev;
            }
            prev = idx;
            prev_interval = interval_of[r * nx + c];
        }
    }
    // Row sweep through the transposed region for horizontal adjacency.
    for (std::size_t r = 0; r < ny; ++r) {
        const IntervalSet& sec = f.transposed_region().section_at(g.ys[r]);
        int prev = -1;
        int prev_interval = -1;
        for (std::size_t c = 0; c < nx; ++c) {
            const int idx = g.index_at[r * nx + c];
            if (idx < 0) continue;
            const int k = intervals::find(sec, g.xs[c]);
            if (prev >= 0 && k >= 0 && k == prev_interval) {
                g.neighbors[prev][Right] = idx;
                g.neighbors[idx][Left] = prev;
            }
            prev = idx;
            prev_interval = k;
        }
    }
    return g;
}

std::optional<int> locate_grid_point(const GridGraph& g, const Point& p) {
    const int c = find_coord(g.xs, p.x);
    const int r = find_coord(g.ys, p.y);
    if (c < 0 || r < 0) return std::nullopt;
    const int idx = g.index_at[static_cast<std::size_t>(r) * g.xs.size() + static_cast<std::size_t>(c)];
    if (idx < 0) return std::nullopt;
    return idx;
}

}  // namespace biplan
