#include "biplan/rect_set.hpp"

#include <algorithm>
#include <cassert>

namespace biplan {

namespace intervals {

IntervalSet normalized(IntervalSet v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    IntervalSet out;
    out.reserve(v.size());
    for (auto& iv : v) {
        if (iv.hi < iv.lo) continue;
        if (!out.empty() && iv.lo <= out.back().hi) {
            if (out.back().hi < iv.hi) out.back().hi = std::move(iv.hi);
        } else {
            out.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    if (b.empty()) return a;
    if (a.empty()) return b;
    IntervalSet all;
    all.reserve(a.size() + b.size());
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return normalized(std::move(all));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    IntervalSet out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Scalar& lo = max(a[i].lo, b[j].lo);
        const Scalar& hi = min(a[i].hi, b[j].hi);
        if (lo <= hi) out.push_back({lo, hi});
        if (a[i].hi < b[j].hi) ++i;
        else ++j;
    }
    return out;
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
    // Sweep each interval of a, cutting out every overlapping interval of b.
    // `cur_open` marks whether the running left end belongs to b (and is thus
    // excluded from the open difference before closure).
    IntervalSet out;
    for (const auto& s : a) {
        Scalar cur = s.lo;
        bool cur_open = false;
        bool done = false;
        for (const auto& c : b) {
            if (c.hi < cur || (c.hi == cur && cur_open)) continue;
            if (c.lo > s.hi) break;
            // piece [cur, c.lo) before the cut
            if (cur < c.lo) out.push_back({cur, c.lo});
            if (c.hi >= s.hi) {
                done = true;
                break;
            }
            if (cur < c.hi || !cur_open) {
                cur = c.hi;
                cur_open = true;
            }
        }
        if (done) continue;
        if (cur < s.hi || (cur == s.hi && !cur_open)) out.push_back({cur, s.hi});
    }
    return normalized(std::move(out));
}

int find(const IntervalSet& s, const Scalar& v) {
    auto it = std::upper_bound(s.begin(), s.end(), v, [](const Scalar& x, const Interval& iv) { return x < iv.lo; });
    if (it == s.begin()) return -1;
    --it;
    return it->hi >= v ? static_cast<int>(it - s.begin()) : -1;
}

bool contains(const IntervalSet& s, const Scalar& v) { return find(s, v) >= 0; }

}  // namespace intervals

namespace {

const IntervalSet kEmptySection{};

IntervalSet section_from(std::span<const Rect> rects, const Scalar& x_lo, const Scalar& x_hi) {
    IntervalSet s;
    for (const auto& r : rects) {
        if (r.x_lo <= x_lo && x_hi <= r.x_hi) s.push_back({r.y_lo, r.y_hi});
    }
    return intervals::normalized(std::move(s));
}

}  // namespace

RectSet::RectSet(std::vector<Scalar> xs, std::vector<IntervalSet> lines, std::vector<IntervalSet> slabs)
    : xs_(std::move(xs)), lines_(std::move(lines)), slabs_(std::move(slabs)) {
    canonicalize();
}

void RectSet::canonicalize() {
    const std::size_t k = xs_.size();
    if (k == 0) return;
    assert(lines_.size() == k && slabs_.size() + 1 == k);
    for (std::size_t i = 0; i < k; ++i) {
        if (i > 0) lines_[i] = intervals::unite(lines_[i], slabs_[i - 1]);
        if (i + 1 < k) lines_[i] = intervals::unite(lines_[i], slabs_[i]);
    }
    std::vector<Scalar> xs;
    std::vector<IntervalSet> lines;
    std::vector<IntervalSet> slabs;
    for (std::size_t i = 0; i < k; ++i) {
        const IntervalSet& left = i > 0 ? slabs_[i - 1] : kEmptySection;
        const IntervalSet& right = i + 1 < k ? slabs_[i] : kEmptySection;
        const bool redundant = lines_[i] == left && lines_[i] == right;
        if (redundant) continue;  // the slab on the left simply extends to the right
        if (!xs.empty()) slabs.push_back(left);
        xs.push_back(xs_[i]);
        lines.push_back(lines_[i]);
    }
    xs_ = std::move(xs);
    lines_ = std::move(lines);
    slabs_ = std::move(slabs);
}

RectSet RectSet::from_parts(std::vector<Scalar> xs, std::vector<IntervalSet> lines,
                           std::vector<IntervalSet> slabs) {
    return RectSet(std::move(xs), std::move(lines), std::move(slabs));
}

RectSet RectSet::from_rects(std::span<const Rect> rects) {
    std::vector<Scalar> xs;
    for (const auto& r : rects) {
        if (!r.valid()) continue;
        xs.push_back(r.x_lo);
        xs.push_back(r.x_hi);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Rect> valid;
    valid.reserve(rects.size());
    for (const auto& r : rects) {
        if (r.valid()) valid.push_back(r);
    }
    std::vector<IntervalSet> lines(xs.size());
    std::vector<IntervalSet> slabs(xs.empty() ? 0 : xs.size() - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        lines[i] = section_from(valid, xs[i], xs[i]);
        if (i + 1 < xs.size()) slabs[i] = section_from(valid, xs[i], xs[i + 1]);
    }
    return RectSet(std::move(xs), std::move(lines), std::move(slabs));
}

const IntervalSet& RectSet::section_at(const Scalar& x) const {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    if (it != xs_.end() && *it == x) return lines_[static_cast<std::size_t>(it - xs_.begin())];
    if (it == xs_.begin() || it == xs_.end()) return kEmptySection;
    return slabs_[static_cast<std::size_t>(it - xs_.begin()) - 1];
}

bool RectSet::contains(const Point& p) const { return intervals::contains(section_at(p.x), p.y); }

bool RectSet::contains_segment(const Point& p, const Point& q) const {
    if (p.x == q.x) {
        const IntervalSet& s = section_at(p.x);
        const int i = intervals::find(s, min(p.y, q.y));
        return i >= 0 && s[static_cast<std::size_t>(i)].hi >= max(p.y, q.y);
    }
    const Point& l = p.x < q.x ? p : q;
    const Point& r = p.x < q.x ? q : p;
    if (xs_.empty() || l.x < xs_.front() || r.x > xs_.back()) return false;
    const Scalar slope = (r.y - l.y) / (r.x - l.x);
    auto y_at = [&](const Scalar& x) { return l.y + slope * (x - l.x); };

    // Walk the breakpoints inside [l.x, r.x] and the open slab pieces between them.
    auto it = std::lower_bound(xs_.begin(), xs_.end(), l.x);
    Scalar piece_lo = l.x;
    while (true) {
        const bool at_break = it != xs_.end() && *it <= r.x;
        const Scalar piece_hi = at_break ? *it : r.x;
        if (piece_lo < piece_hi) {
            // open slab piece (piece_lo, piece_hi) lies inside slab (it-1, it)
            const std::size_t slab = static_cast<std::size_t>(it - xs_.begin()) - 1;
            const IntervalSet& s = slabs_[slab];
            const int a = intervals::find(s, y_at(piece_lo));
            if (a < 0 || a != intervals::find(s, y_at(piece_hi))) return false;
        }
        if (!at_break) break;
        const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        if (!intervals::contains(lines_[i], y_at(*it))) return false;
        piece_lo = *it;
        ++it;
        if (piece_lo == r.x) break;
    }
    return true;
}

std::vector<Rect> RectSet::rects() const {
    std::vector<Rect> out;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        if (i + 1 < xs_.size()) {
            for (const auto& iv : slabs_[i]) out.push_back({xs_[i], xs_[i + 1], iv.lo, iv.hi});
        }
        IntervalSet covered = intervals::unite(i > 0 ? slabs_[i - 1] : kEmptySection,
                                               i + 1 < xs_.size() ? slabs_[i] : kEmptySection);
        // Remaining parts of the line section, including isolated points.
        IntervalSet rest;
        for (const auto& iv : lines_[i]) {
            IntervalSet single{iv};
            IntervalSet diff = intervals::subtract(single, covered);
            rest.insert(rest.end(), diff.begin(), diff.end());
        }
        for (const auto& iv : rest) out.push_back({xs_[i], xs_[i], iv.lo, iv.hi});
    }
    return out;
}

RectSet RectSet::transposed() const {
    std::vector<Rect> pieces;
    for (std::size_t i = 0; i < xs_.size(); ++i) {
        for (const auto& iv : lines_[i]) pieces.push_back({iv.lo, iv.hi, xs_[i], xs_[i]});
        if (i + 1 < xs_.size()) {
            for (const auto& iv : slabs_[i]) pieces.push_back({iv.lo, iv.hi, xs_[i], xs_[i + 1]});
        }
    }
    return from_rects(pieces);
}

Scalar RectSet::area() const {
    Scalar total(0);
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        const Scalar w = xs_[i + 1] - xs_[i];
        for (const auto& iv : slabs_[i]) total += w * (iv.hi - iv.lo);
    }
    return total;
}

std::optional<Rect> RectSet::bounds() const {
    if (xs_.empty()) return std::nullopt;
    Scalar y_lo = lines_.front().front().lo;
    Scalar y_hi = lines_.front().back().hi;
    for (const auto& s : lines_) {
        if (s.empty()) continue;
        if (s.front().lo < y_lo) y_lo = s.front().lo;
        if (s.back().hi > y_hi) y_hi = s.back().hi;
    }
    return Rect{xs_.front(), xs_.back(), y_lo, y_hi};
}

RectSet RectSet::eroded_vertically(const Scalar& r) const {
    auto erode = [&](const IntervalSet& s) {
        IntervalSet out;
        for (const auto& iv : s) {
            Interval e{iv.lo + r, iv.hi - r};
            if (e.lo <= e.hi) out.push_back(std::move(e));
        }
        return out;
    };
    std::vector<IntervalSet> lines, slabs;
    for (const auto& s : lines_) lines.push_back(erode(s));
    for (const auto& s : slabs_) slabs.push_back(erode(s));
    return RectSet(xs_, std::move(lines), std::move(slabs));
}

RectSet RectSet::dilated_vertically(const Scalar& r) const {
    auto dilate = [&](const IntervalSet& s) {
        IntervalSet out;
        for (const auto& iv : s) out.push_back({iv.lo - r, iv.hi + r});
        return intervals::normalized(std::move(out));
    };
    std::vector<IntervalSet> lines, slabs;
    for (const auto& s : lines_) lines.push_back(dilate(s));
    for (const auto& s : slabs_) slabs.push_back(dilate(s));
    return RectSet(xs_, std::move(lines), std::move(slabs));
}

RectSet rectset_boolean(BoolOp op, const RectSet& a, const RectSet& b) {
    std::vector<Scalar> xs;
    xs.reserve(a.breakpoints().size() + b.breakpoints().size());
    std::merge(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(), b.breakpoints().end(),
               std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto apply = [op](const IntervalSet& sa, const IntervalSet& sb) {
        switch (op) {
            case BoolOp::Union: return intervals::unite(sa, sb);
            case BoolOp::Intersect: return intervals::intersect(sa, sb);
            case BoolOp::Difference: return intervals::subtract(sa, sb);
        }
        return IntervalSet{};
    };

    std::vector<IntervalSet> lines(xs.size());
    std::vector<IntervalSet> slabs(xs.empty() ? 0 : xs.size() - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        lines[i] = apply(a.section_at(xs[i]), b.section_at(xs[i]));
        if (i + 1 < xs.size()) {
            const Scalar mid = (xs[i] + xs[i + 1]) / Scalar(2);
            slabs[i] = apply(a.section_at(mid), b.section_at(mid));
        }
    }
    // Canonicalization restores closedness across x (line sections absorb the
    // neighbouring slab sections), which completes the closure for Difference.
    return RectSet::from_parts(std::move(xs), std::move(lines), std::move(slabs));
}

RectSet dilate_by_square(const RectSet& a, const Scalar& r) {
    std::vector<Rect> grown;
    for (const auto& rect : a.rects()) grown.push_back(rect.grown(r));
    return RectSet::from_rects(grown);
}

RectSet erode_by_square(const RectSet& a, const Scalar& r) {
    // Erosion by a square = erosion by a vertical segment, then by a horizontal one.
    return a.eroded_vertically(r).transposed().eroded_vertically(r).transposed();
}

}  // namespace biplan
