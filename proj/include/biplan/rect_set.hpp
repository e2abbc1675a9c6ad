#pragma once

#include <optional>
#include <span>
#include <vector>

#include "biplan/geometry.hpp"

namespace biplan {

/// Closed interval [lo, hi]; lo == hi is a single point.
struct Interval {
    Scalar lo;
    Scalar hi;

    bool contains(const Scalar& v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise disjoint closed intervals separated by positive gaps.
using IntervalSet = std::vector<Interval>;

namespace intervals {

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
/// Closure of a \ b.
IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);
IntervalSet normalized(IntervalSet v);
bool contains(const IntervalSet& s, const Scalar& v);
/// Index of the interval containing v, or -1.
int find(const IntervalSet& s, const Scalar& v);

}  // namespace intervals

enum class BoolOp { Union, Intersect, Difference };

/// A closed rectilinear region stored as a vertical-slab decomposition.
///
/// The region is described by sorted breakpoints x_0 < ... < x_{k-1}. For each
/// breakpoint there is a "line section" (the region's intersection with the
/// vertical line x = x_i) and for each open slab (x_i, x_{i+1}) a "slab
/// section" that is constant across the slab. Both are IntervalSets, so
/// zero-width pieces (segments and isolated points) are representable; a
/// corridor of width exactly one eroded by a unit square is such a piece.
///
/// Invariants of the canonical form: every line section contains both
/// neighbouring slab sections (closedness) and no breakpoint is redundant.
/// Two RectSets describe the same region iff they compare equal.
class RectSet {
public:
    RectSet() = default;

    static RectSet from_rects(std::span<const Rect> rects);
    static RectSet from_rect(const Rect& r) { return from_rects(std::span<const Rect>(&r, 1)); }
    /// Builds from raw breakpoints and sections (slabs.size() == xs.size() - 1)
    /// and canonicalizes.
    static RectSet from_parts(std::vector<Scalar> xs, std::vector<IntervalSet> lines,
                              std::vector<IntervalSet> slabs);

    bool empty() const { return xs_.empty(); }

    bool contains(const Point& p) const;
    /// True iff every point of the straight segment pq lies in the region.
    bool contains_segment(const Point& p, const Point& q) const;

    /// Cross-section at x (line section, slab section or empty).
    const IntervalSet& section_at(const Scalar& x) const;

    const std::vector<Scalar>& breakpoints() const { return xs_; }
    const std::vector<IntervalSet>& line_sections() const { return lines_; }
    const std::vector<IntervalSet>& slab_sections() const { return slabs_; }

    /// Interior-disjoint closed rects whose union is the region: one rect per
    /// slab interval plus degenerate vertical pieces not covered by slabs.
    std::vector<Rect> rects() const;

    RectSet transposed() const;
    Scalar area() const;
    std::optional<Rect> bounds() const;

    /// Per-section operations: these act along y only.
    RectSet eroded_vertically(const Scalar& r) const;
    RectSet dilated_vertically(const Scalar& r) const;

    friend bool operator==(const RectSet&, const RectSet&) = default;

private:
    RectSet(std::vector<Scalar> xs, std::vector<IntervalSet> lines, std::vector<IntervalSet> slabs);
    void canonicalize();

    std::vector<Scalar> xs_;
    std::vector<IntervalSet> lines_;
    std::vector<IntervalSet> slabs_;  // size == xs_.size() - 1 (or 0)
};

RectSet rectset_boolean(BoolOp op, const RectSet& a, const RectSet& b);

/// Minkowski sum with the square [-r, r]^2.
RectSet dilate_by_square(const RectSet& a, const Scalar& r);

/// Minkowski difference: all p with p + [-r, r]^2 contained in a.
RectSet erode_by_square(const RectSet& a, const Scalar& r);

}  // namespace biplan
