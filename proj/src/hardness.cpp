#include "biplan/hardness.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "biplan/error.hpp"
#include "biplan/planner.hpp"

namespace biplan {

namespace {

const Scalar kHalf(1, 2);

Ring rect_ring(const Rect& r) { return {{r.x_lo, r.y_lo}, {r.x_hi, r.y_lo}, {r.x_hi, r.y_hi}, {r.x_lo, r.y_hi}}; }

std::vector<Scalar> gadget_starts(const ScaledInstance& y) {
    std::vector<Scalar> xs{Scalar(0)};
    for (const auto& yi : y.y) xs.push_back(xs.back() + Scalar(10) - Scalar(2) * yi);
    return xs;
}

GadgetLayout make_layout(const Scalar& x, const Scalar& y) {
    GadgetLayout l;
    l.x0 = x;
    l.width = Scalar(10) - Scalar(2) * y;
    const Scalar end = x + l.width;
    const Scalar g = x + Scalar(3, 2);
    l.s_a = {x, Scalar(1)};
    l.s_b = {x, Scalar(-1)};
    l.t_a = {end, Scalar(1)};
    l.t_b = {end, Scalar(-1)};
    l.island_top = {g - y, g, Scalar(1) - y / Scalar(2), Scalar(1) + y};
    l.island_bottom = {g - y, g, Scalar(-1) - y, Scalar(-1) + y / Scalar(2)};
    l.gate = {{g, l.island_bottom.y_hi}, {g, l.island_top.y_lo}};
    l.stub_top = {{g, l.island_top.y_lo}, {g, Scalar(1)}};
    l.stub_bottom = {{g, Scalar(-1)}, {g, l.island_bottom.y_hi}};
    const Rect islands[] = {l.island_top, l.island_bottom};
    l.obstacles = RectSet::from_rects(islands);

    const Scalar low = kHalf - y / Scalar(2);   // A's height under the top island
    const Scalar high = Scalar(3, 2) + y;        // A's height over the top island
    const Scalar turn = x + Scalar(2);
    l.pi_a = {l.s_a, {x, low}, {turn, low}, {turn, Scalar(1)}, l.t_a};
    l.pi_bar_a = {l.s_a, {x, high}, {turn, high}, {turn, Scalar(1)}, l.t_a};
    l.pi_b = {l.s_b, {x, -low}, {turn, -low}, {turn, Scalar(-1)}, l.t_b};
    l.pi_bar_b = {l.s_b, {x, -high}, {turn, -high}, {turn, Scalar(-1)}, l.t_b};
    return l;
}

/// Outer boundary: rooms of height 6 joined by pinches of height 3 at every
/// junction, each pinch split by a wall so that the lanes y = +-1 are the only
/// way through.
RectilinearPolygon chain_polygon(const ScaledInstance& y, std::optional<std::size_t> blocked) {
    const auto xs = gadget_starts(y);
    const Scalar len = xs.back();
    const Scalar room(3);
    const Scalar pinch(3, 2);
    Ring outer{{-kHalf, -room}};
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        const Scalar a = xs[i] - Scalar(1);
        const Scalar b = xs[i] - kHalf;
        outer.insert(outer.end(), {{a, -room}, {a, -pinch}, {b, -pinch}, {b, -room}});
    }
    outer.insert(outer.end(), {{len + kHalf, -room}, {len + kHalf, room}});
    for (std::size_t i = xs.size() - 2; i >= 1; --i) {
        const Scalar a = xs[i] - Scalar(1);
        const Scalar b = xs[i] - kHalf;
        outer.insert(outer.end(), {{b, room}, {b, pinch}, {a, pinch}, {a, room}});
    }
    outer.push_back({-kHalf, room});

    RectilinearPolygon poly{std::move(outer), {}};
    for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
        poly.holes.push_back(rect_ring({xs[i] - Scalar(1), xs[i] - kHalf, -kHalf, kHalf}));
    }
    for (std::size_t i = 0; i < y.y.size(); ++i) {
        const GadgetLayout l = make_layout(xs[i], y.y[i]);
        if (blocked && *blocked == i) {
            poly.holes.push_back(rect_ring({l.island_top.x_lo, l.island_top.x_hi, l.island_bottom.y_lo, l.island_top.y_hi}));
        } else {
            poly.holes.push_back(rect_ring(l.island_top));
            poly.holes.push_back(rect_ring(l.island_bottom));
        }
    }
    return poly;
}

[[noreturn]] void violated(std::size_t i, const std::string& what) {
    throw Error(ErrorCode::GeometryConstraintViolated, "gadget " + std::to_string(i + 1) + ": " + what);
}

/// l1 length along the polyline from its start to p; p must lie on it.
std::optional<Scalar> length_until(const std::vector<Point>& path, const Point& p) {
    Scalar acc(0);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        const Point& a = path[k];
        const Point& b = path[k + 1];
        const Rect box = bounding_box({a, b});
        if (box.contains(p) && (a.x == b.x || a.y == b.y)) return acc + l1_dist(a, p);
        acc += l1_dist(a, b);
    }
    return std::nullopt;
}

bool path_in_free(const FreeSpace& f, const std::vector<Point>& path) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        if (!segment_in_free(f, path[k], path[k + 1])) return false;
    }
    return true;
}

/// No point of one path is within l-infinity distance < 1 of a point of the other.
bool paths_never_conflict(const std::vector<Point>& p, const std::vector<Point>& q) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        for (std::size_t j = 0; j + 1 < q.size(); ++j) {
            if (linf_box_dist(bounding_box({p[i], p[i + 1]}), bounding_box({q[j], q[j + 1]})) < Scalar(1)) return false;
        }
    }
    return true;
}

GadgetMeasurement measure(const FreeSpace& f, const FreeSpace& blocked, const GadgetLayout& l) {
    GadgetMeasurement m;
    auto shortest = [](const FreeSpace& fs, const Point& p, const Point& q) {
        auto d = single_robot_shortest(fs, p, q);
        if (!d) throw Error(ErrorCode::GeometryConstraintViolated, "no path " + to_string(p) + " -> " + to_string(q));
        return *d;
    };
    m.shortest_a = shortest(f, l.s_a, l.t_a);
    m.shortest_b = shortest(f, l.s_b, l.t_b);
    m.avoiding_a = shortest(blocked, l.s_a, l.t_a);
    m.avoiding_b = shortest(blocked, l.s_b, l.t_b);
    m.gate_length = l1_dist(l.gate.a, l.gate.b);
    m.stub_length = l1_dist(l.stub_top.a, l.stub_top.b);
    const IntervalSet& sec = f.region().section_at(l.gate.a.x);
    const int k = intervals::find(sec, Scalar(0));
    m.gate_clearance = k < 0 ? Scalar(-1) : sec[k].hi - sec[k].lo;
    return m;
}

void verify_gadget(const FreeSpace& f, const FreeSpace& blocked, const GadgetLayout& l, const Scalar& y, std::size_t i) {
    const Scalar through = Scalar(11) - y;
    const GadgetMeasurement m = measure(f, blocked, l);
    // (a) through the gate
    if (m.shortest_a != through || m.shortest_b != through) {
        violated(i, "shortest paths are " + m.shortest_a.str() + " and " + m.shortest_b.str() + ", expected " + through.str());
    }
    if (polyline_length(l.pi_a) != through || polyline_length(l.pi_b) != through || !path_in_free(f, l.pi_a) ||
        !path_in_free(f, l.pi_b)) {
        violated(i, "gate paths are not free or have the wrong length");
    }
    // (b) around the island
    if (m.avoiding_a != Scalar(11) || m.avoiding_b != Scalar(11)) {
        violated(i, "gate-avoiding paths are " + m.avoiding_a.str() + " and " + m.avoiding_b.str() + ", expected 11");
    }
    if (polyline_length(l.pi_bar_a) != Scalar(11) || polyline_length(l.pi_bar_b) != Scalar(11) ||
        !path_in_free(blocked, l.pi_bar_a) || !path_in_free(blocked, l.pi_bar_b)) {
        violated(i, "gate-avoiding paths are not free or have the wrong length");
    }
    // (c)
    if (!paths_never_conflict(l.pi_a, l.pi_bar_b) || !paths_never_conflict(l.pi_bar_a, l.pi_b)) {
        violated(i, "a gate path conflicts with the other robot's avoiding path");
    }
    // (d) crossing constants: A is past the gate once its square clears x = g
    const Scalar g = l.gate.a.x;
    const Point a_past{g + kHalf, l.pi_a[1].y};
    const Point b_past{g + kHalf, l.pi_b[1].y};
    const auto pre = length_until(l.pi_a, a_past);
    const auto b_at = length_until(l.pi_b, b_past);
    if (!pre || *pre != Scalar(5, 2) + y / Scalar(2)) violated(i, "run to the gate crossing has the wrong length");
    if (!b_at || polyline_length(l.pi_b) - *b_at != Scalar(17, 2) - Scalar(3, 2) * y) {
        violated(i, "remainder after the gate crossing has the wrong length");
    }
    // (e)
    if (m.gate_length != Scalar(2) - y || m.gate_length < Scalar(1) || m.gate_length >= Scalar(2)) {
        violated(i, "gate length is " + m.gate_length.str());
    }
    if (m.stub_length != y / Scalar(2) || l1_dist(l.stub_bottom.a, l.stub_bottom.b) != y / Scalar(2)) {
        violated(i, "stub length is " + m.stub_length.str());
    }
    if (m.gate_clearance.sign() < 0 || m.gate_clearance >= Scalar(1)) {
        violated(i, "two robots fit side by side in the gate");
    }
}

}  // namespace

ScaledInstance scale_instance(const PartitionInstance& x) {
    if (x.values.empty()) throw Error(ErrorCode::InvalidPartition, "partition instance is empty");
    std::int64_t total = 0;
    for (auto v : x.values) {
        if (v <= 0) throw Error(ErrorCode::InvalidPartition, "values must be positive");
        total += v;
    }
    ScaledInstance out;
    for (auto v : x.values) out.y.push_back(Scalar(v, total));
    return out;
}

Workspace gate_blocked_workspace(const ScaledInstance& y, std::size_t i) { return Workspace(chain_polygon(y, i)); }

HardnessInstance build_hardness_workspace(const ScaledInstance& y, bool verify) {
    if (y.y.empty()) throw Error(ErrorCode::InvalidPartition, "no gadgets");
    const auto xs = gadget_starts(y);
    std::vector<GadgetLayout> layouts;
    for (std::size_t i = 0; i < y.y.size(); ++i) layouts.push_back(make_layout(xs[i], y.y[i]));
    HardnessInstance inst{Workspace(chain_polygon(y, std::nullopt)),
                          {layouts.front().s_a, layouts.front().s_b},
                          {layouts.back().t_a, layouts.back().t_b},
                          std::move(layouts),
                          Scalar(11) * Scalar(static_cast<std::int64_t>(y.y.size())) - kHalf};
    if (verify) {
        const FreeSpace f = compute_free_space(inst.workspace);
        for (std::size_t i = 0; i < y.y.size(); ++i) {
            const GadgetLayout& l = inst.layouts[i];
            if (i + 1 < y.y.size() && (l.t_a != inst.layouts[i + 1].s_a || l.t_b != inst.layouts[i + 1].s_b)) {
                violated(i, "goal does not coincide with the next gadget's start");
            }
            verify_gadget(f, compute_free_space(gate_blocked_workspace(y, i)), l, y.y[i], i);
        }
    }
    return inst;
}

GadgetMeasurement measure_gadget(const HardnessInstance& inst, const ScaledInstance& y, std::size_t i) {
    return measure(compute_free_space(inst.workspace), compute_free_space(gate_blocked_workspace(y, i)), inst.layouts.at(i));
}

TimedPlan plan_from_partition(const std::vector<GadgetLayout>& layouts, const ScaledInstance& y,
                              const std::vector<std::size_t>& ya, const std::vector<std::size_t>& yb) {
    const std::size_t m = layouts.size();
    if (m != y.y.size()) throw Error(ErrorCode::InvalidPartition, "layout and value counts differ");
    std::vector<int> owner(m, 0);
    for (const auto* part : {&ya, &yb}) {
        for (std::size_t i : *part) {
            if (i >= m) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(i + 1) + " is out of range");
            if (owner[i]++) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(i + 1) + " is used twice");
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (!owner[i]) throw Error(ErrorCode::InvalidPartition, "index " + std::to_string(i + 1) + " is not assigned");
    }
    const std::set<std::size_t> in_a(ya.begin(), ya.end());
    std::vector<Point> path_a{layouts.front().s_a};
    std::vector<Point> path_b{layouts.front().s_b};
    for (std::size_t i = 0; i < m; ++i) {
        const auto& pa = in_a.count(i) ? layouts[i].pi_a : layouts[i].pi_bar_a;
        const auto& pb = in_a.count(i) ? layouts[i].pi_bar_b : layouts[i].pi_b;
        path_a.insert(path_a.end(), pa.begin() + 1, pa.end());
        path_b.insert(path_b.end(), pb.begin() + 1, pb.end());
    }
    return simultaneous_unit_speed(path_a, path_b);
}

namespace {

/// Exact test that two robots moving linearly by one lattice step each keep
/// l-infinity distance >= q/p, all in lattice units.
bool swept_separated(std::int64_t rx, std::int64_t ry, std::int64_t dx, std::int64_t dy, std::int64_t p, std::int64_t q) {
    auto ok_at = [&](std::int64_t a, std::int64_t b) {  // lambda = a/b, b > 0
        const std::int64_t vx = std::abs(rx * b + a * dx);
        const std::int64_t vy = std::abs(ry * b + a * dy);
        return std::max(vx, vy) * p >= q * b;
    };
    if (!ok_at(0, 1) || !ok_at(1, 1)) return false;
    const std::array<std::pair<std::int64_t, std::int64_t>, 4> lines{
        {{rx, dx}, {ry, dy}, {rx - ry, dx - dy}, {rx + ry, dx + dy}}};
    for (auto [c0, c1] : lines) {
        if (c1 == 0) continue;
        std::int64_t a = -c0;
        std::int64_t b = c1;
        if (b < 0) {
            a = -a;
            b = -b;
        }
        if (a < 0 || a > b) continue;
        if (!ok_at(a, b)) return false;
    }
    return true;
}

}  // namespace

TinySearchResult tiny_makespan_search(const Workspace& w, const Config& s, const Config& t, const Scalar& T_max,
                                      const Scalar& spacing, const Scalar& time_step, std::uint64_t budget) {
    if (spacing.sign() <= 0 || time_step.sign() <= 0 || spacing > time_step) {
        throw Error(ErrorCode::SpacingViolation, "need 0 < spacing <= time_step");
    }
    for (const Point* p : {&s.a, &s.b, &t.a, &t.b}) {
        if (!p->x.is_multiple_of(spacing) || !p->y.is_multiple_of(spacing)) {
            throw Error(ErrorCode::NotOnLattice, to_string(*p) + " is not on the lattice of spacing " + spacing.str());
        }
    }
    const FreeSpace f = compute_free_space(w);
    if (!is_free_config(f, s) || !is_free_config(f, t)) {
        throw Error(ErrorCode::StartOrGoalNotFree, "start or goal configuration is not free");
    }
    const Rect box = *f.region().bounds();
    const std::int64_t i0 = (box.x_lo / spacing).ceil().num().get_si();
    const std::int64_t i1 = (box.x_hi / spacing).floor().num().get_si();
    const std::int64_t j0 = (box.y_lo / spacing).ceil().num().get_si();
    const std::int64_t j1 = (box.y_hi / spacing).floor().num().get_si();
    const std::int64_t hgt = j1 - j0 + 1;
    std::vector<int> id(static_cast<std::size_t>((i1 - i0 + 1) * hgt), -1);
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::int64_t i = i0; i <= i1; ++i) {
        const IntervalSet& sec = f.region().section_at(Scalar(i) * spacing);
        for (std::int64_t j = j0; j <= j1; ++j) {
            if (intervals::contains(sec, Scalar(j) * spacing)) {
                id[(i - i0) * hgt + (j - j0)] = static_cast<int>(pts.size());
                pts.push_back({i, j});
            }
        }
    }
    const std::uint64_t n = pts.size();
    if (n * n > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    std::to_string(n * n) + " joint states exceed the budget of " + std::to_string(budget));
    }
    // moves[k][0] is "stay"; 1..4 follow Direction order.
    const std::int64_t di[] = {0, 1, 0, -1, 0};
    const std::int64_t dj[] = {0, 0, 1, 0, -1};
    std::vector<std::array<int, 5>> moves(n);
    for (std::size_t k = 0; k < n; ++k) {
        moves[k] = {static_cast<int>(k), -1, -1, -1, -1};
        for (int d = 1; d < 5; ++d) {
            const std::int64_t ni = pts[k].first + di[d];
            const std::int64_t nj = pts[k].second + dj[d];
            if (ni < i0 || ni > i1 || nj < j0 || nj > j1) continue;
            const int o = id[(ni - i0) * hgt + (nj - j0)];
            if (o < 0) continue;
            const Point p{Scalar(pts[k].first) * spacing, Scalar(pts[k].second) * spacing};
            const Point q{Scalar(ni) * spacing, Scalar(nj) * spacing};
            if (segment_in_free(f, p, q)) moves[k][d] = o;
        }
    }
    auto locate = [&](const Point& p) {
        const std::int64_t i = (p.x / spacing).num().get_si();
        const std::int64_t j = (p.y / spacing).num().get_si();
        return id[(i - i0) * hgt + (j - j0)];
    };
    const int sa = locate(s.a), sb = locate(s.b), ta = locate(t.a), tb = locate(t.b);

    auto lattice_bfs = [&](int src) {
        std::vector<int> d(n, -1);
        std::vector<int> queue{src};
        d[src] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (int k = 1; k < 5; ++k) {
                const int v = moves[queue[h]][k];
                if (v >= 0 && d[v] < 0) {
                    d[v] = d[queue[h]] + 1;
                    queue.push_back(v);
                }
            }
        }
        return d;
    };
    const std::vector<int> to_a = lattice_bfs(ta);
    const std::vector<int> to_b = lattice_bfs(tb);
    const std::int64_t horizon = (T_max / time_step).floor().num().get_si();
    // threshold: distance * spacing >= 1, i.e. lattice distance * p >= q
    const std::int64_t sp = spacing.num().get_si();
    const std::int64_t sq = spacing.den().get_si();

    TinySearchResult res;
    auto key = [n](int a, int b) { return static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b); };
    auto remaining = [&](int a, int b) -> std::int64_t {
        if (to_a[a] < 0 || to_b[b] < 0) return -1;
        return std::max(to_a[a], to_b[b]);
    };
    if (remaining(sa, sb) < 0 || remaining(sa, sb) > horizon) return res;
    std::vector<std::int32_t> arrival(n * n, -1);
    std::vector<std::uint8_t> via(n * n, 0);  // move pair code 5 * da + db
    std::vector<std::uint64_t> frontier{key(sa, sb)};
    arrival[frontier[0]] = 0;
    res.states = 1;
    const std::uint64_t goal = key(ta, tb);
    for (std::int64_t step = 0; !frontier.empty() && arrival[goal] < 0 && step < horizon; ++step) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t u : frontier) {
            const int a = static_cast<int>(u / n);
            const int b = static_cast<int>(u % n);
            for (int da = 0; da < 5; ++da) {
                const int na = moves[a][da];
                if (na < 0) continue;
                for (int db = 0; db < 5; ++db) {
                    const int nb = moves[b][db];
                    if (nb < 0) continue;
                    const std::uint64_t v = key(na, nb);
                    if (arrival[v] >= 0) continue;
                    const std::int64_t rest = remaining(na, nb);
                    if (rest < 0 || step + 1 + rest > horizon) continue;
                    const std::int64_t rx = pts[a].first - pts[b].first;
                    const std::int64_t ry = pts[a].second - pts[b].second;
                    const std::int64_t dx = di[da] - di[db];
                    const std::int64_t dy = dj[da] - dj[db];
                    if (!swept_separated(rx, ry, dx, dy, sp, sq)) continue;
                    arrival[v] = static_cast<std::int32_t>(step + 1);
                    via[v] = static_cast<std::uint8_t>(5 * da + db);
                    next.push_back(v);
                    ++res.states;
                }
            }
        }
        frontier = std::move(next);
    }
    if (arrival[goal] < 0) return res;

    // Walk back through the recorded moves.
    std::vector<std::pair<int, int>> states{{ta, tb}};
    for (std::uint64_t u = goal; arrival[u] > 0;) {
        const int a = static_cast<int>(u / n);
        const int b = static_cast<int>(u % n);
        const int da = via[u] / 5;
        const int db = via[u] % 5;
        const int pa = da == 0 ? a : moves[a][1 + (da + 1) % 4];
        const int pb = db == 0 ? b : moves[b][1 + (db + 1) % 4];
        u = key(pa, pb);
        states.push_back({pa, pb});
    }
    std::reverse(states.begin(), states.end());
    TimedPlan tp;
    auto point_of = [&](int k) { return Point{Scalar(pts[k].first) * spacing, Scalar(pts[k].second) * spacing}; };
    for (std::size_t k = 0; k < states.size(); ++k) {
        const Scalar tk = Scalar(static_cast<std::int64_t>(k)) * time_step;
        tp.traj_a.push_back({tk, point_of(states[k].first)});
        tp.traj_b.push_back({tk, point_of(states[k].second)});
    }
    tp.T = tp.traj_a.back().t;
    res.status = TinyStatus::Feasible;
    res.steps = static_cast<std::int64_t>(states.size()) - 1;
    res.witness = std::move(tp);
    return res;
}

}  // namespace biplan
