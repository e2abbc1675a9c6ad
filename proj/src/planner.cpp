#include "biplan/planner.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>

#include "biplan/error.hpp"

namespace biplan {

namespace {

struct Overflow {};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
Scalar checked_add(const Scalar& a, const Scalar& b) { return a + b; }

std::int64_t abs_diff(std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; }
Scalar abs_diff(const Scalar& a, const Scalar& b) { return abs(a - b); }

/// Point coordinates in the weight domain W plus the separation threshold.
template <class W>
struct Coords {
    std::vector<W> x;
    std::vector<W> y;
    W unit;

    W edge(int i, int j) const { return checked_add(abs_diff(x[i], x[j]), abs_diff(y[i], y[j])); }
    bool separated(int i, int j) const {
        return abs_diff(x[i], x[j]) >= unit || abs_diff(y[i], y[j]) >= unit;
    }
};

Coords<Scalar> exact_coords(const GridGraph& g) {
    Coords<Scalar> c{{}, {}, Scalar(1)};
    for (const auto& p : g.points) {
        c.x.push_back(p.x);
        c.y.push_back(p.y);
    }
    return c;
}

/// Coordinates scaled by the common denominator, or nullopt if they would not
/// comfortably fit in 64 bits.
std::optional<Coords<std::int64_t>> scaled_coords(const GridGraph& g) {
    mpz_class den = 1;
    for (const auto& v : g.xs) den = common_denominator(den, v);
    for (const auto& v : g.ys) den = common_denominator(den, v);
    const mpz_class limit = mpz_class(1) << 40;
    if (den >= limit) return std::nullopt;
    auto scale = [&](const Scalar& v) -> std::optional<std::int64_t> {
        mpz_class s = v.num() * (den / v.den());
        if (abs(s) >= limit) return std::nullopt;
        return s.get_si();
    };
    Coords<std::int64_t> c{{}, {}, den.get_si()};
    for (const auto& p : g.points) {
        auto sx = scale(p.x);
        auto sy = scale(p.y);
        if (!sx || !sy) return std::nullopt;
        c.x.push_back(*sx);
        c.y.push_back(*sy);
    }
    return c;
}

template <class W>
Scalar to_scalar(const W& w, const Coords<W>& c);
template <>
Scalar to_scalar(const std::int64_t& w, const Coords<std::int64_t>& c) {
    return Scalar(mpq_class(mpz_class(static_cast<long>(w)), mpz_class(static_cast<long>(c.unit))));
}
template <>
Scalar to_scalar(const Scalar& w, const Coords<Scalar>&) {
    return w;
}

/// Single-source Dijkstra on the grid graph; nullopt marks unreachable points.
template <class W>
std::vector<std::optional<W>> single_source(const GridGraph& g, const Coords<W>& c, int src) {
    std::vector<std::optional<W>> dist(g.points.size());
    using Entry = std::pair<W, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    dist[src] = W(0);
    pq.push({W(0), src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d != *dist[u]) continue;
        for (int v : g.neighbors[u]) {
            if (v < 0) continue;
            W nd = checked_add(d, c.edge(u, v));
            if (!dist[v] || nd < *dist[v]) {
                dist[v] = nd;
                pq.push({std::move(nd), v});
            }
        }
    }
    return dist;
}

constexpr std::uint8_t kSettled = 0x80;

/// Parent code: 0 for the start, else 1 + robot * 4 + direction moved.
std::uint8_t move_code(int robot, int dir) { return static_cast<std::uint8_t>(1 + robot * 4 + dir); }

template <class W>
class DenseStore {
public:
    explicit DenseStore(std::size_t n) : dist_(n, std::numeric_limits<W>::max()), code_(n, 0) {}
    const W* dist(std::uint64_t k) const {
        return dist_[k] == std::numeric_limits<W>::max() ? nullptr : &dist_[k];
    }
    void set(std::uint64_t k, const W& d, std::uint8_t code) {
        dist_[k] = d;
        code_[k] = code;
    }
    std::uint8_t code(std::uint64_t k) const { return code_[k] & ~kSettled; }
    bool settled(std::uint64_t k) const { return code_[k] & kSettled; }
    void settle(std::uint64_t k) { code_[k] |= kSettled; }

private:
    std::vector<W> dist_;
    std::vector<std::uint8_t> code_;
};

template <class W>
class HashStore {
public:
    const W* dist(std::uint64_t k) const {
        auto it = map_.find(k);
        return it == map_.end() ? nullptr : &it->second.first;
    }
    void set(std::uint64_t k, const W& d, std::uint8_t code) { map_[k] = {d, code}; }
    std::uint8_t code(std::uint64_t k) const { return map_.at(k).second & ~kSettled; }
    bool settled(std::uint64_t k) const {
        auto it = map_.find(k);
        return it != map_.end() && (it->second.second & kSettled);
    }
    void settle(std::uint64_t k) { map_.at(k).second |= kSettled; }

private:
    std::unordered_map<std::uint64_t, std::pair<W, std::uint8_t>> map_;
};

template <class W>
struct Entry {
    W f;  // priority (g, plus the heuristic when enabled)
    W g;
    int ia;
    int ib;

    bool operator>(const Entry& o) const {
        if (f != o.f) return f > o.f;
        if (ia != o.ia) return ia > o.ia;
        return ib > o.ib;
    }
};

template <class W, class Store>
SearchResult search(const GridGraph& g, const Coords<W>& c, ConfigNode s, ConfigNode t, bool use_heuristic,
                    Store& store) {
    const std::uint64_t n = g.points.size();
    auto key = [n](int ia, int ib) { return static_cast<std::uint64_t>(ia) * n + static_cast<std::uint64_t>(ib); };

    std::vector<std::optional<W>> ha;
    std::vector<std::optional<W>> hb;
    if (use_heuristic) {
        ha = single_source(g, c, t.ia);
        hb = single_source(g, c, t.ib);
    }
    auto h = [&](int ia, int ib) -> std::optional<W> {
        if (!use_heuristic) return W(0);
        if (!ha[ia] || !hb[ib]) return std::nullopt;
        return checked_add(*ha[ia], *hb[ib]);
    };

    SearchResult res;
    std::priority_queue<Entry<W>, std::vector<Entry<W>>, std::greater<Entry<W>>> pq;
    if (auto h0 = h(s.ia, s.ib)) {
        store.set(key(s.ia, s.ib), W(0), 0);
        pq.push({*h0, W(0), s.ia, s.ib});
    }
    while (!pq.empty()) {
        Entry<W> e = pq.top();
        pq.pop();
        const std::uint64_t k = key(e.ia, e.ib);
        if (store.settled(k) || *store.dist(k) != e.g) continue;
        store.settle(k);
        ++res.settled;
        if (e.ia == t.ia && e.ib == t.ib) {
            res.status = SearchStatus::Optimal;
            res.cost = to_scalar(e.g, c);
            ConfigNode cur = t;
            res.node_path.push_back(cur);
            for (std::uint8_t code = store.code(k); code != 0; code = store.code(key(cur.ia, cur.ib))) {
                const int robot = (code - 1) / 4;
                const auto dir = static_cast<Direction>((code - 1) % 4);
                int& moved = robot == 0 ? cur.ia : cur.ib;
                moved = g.neighbors[moved][opposite(dir)];
                res.node_path.push_back(cur);
            }
            std::reverse(res.node_path.begin(), res.node_path.end());
            return res;
        }
        for (int robot = 0; robot < 2; ++robot) {
            const int from = robot == 0 ? e.ia : e.ib;
            for (int dir = 0; dir < 4; ++dir) {
                const int to = g.neighbors[from][dir];
                if (to < 0) continue;
                const int na = robot == 0 ? to : e.ia;
                const int nb = robot == 0 ? e.ib : to;
                if (!c.separated(na, nb)) continue;
                const std::uint64_t nk = key(na, nb);
                if (store.settled(nk)) continue;
                W nd = checked_add(e.g, c.edge(from, to));
                const W* old = store.dist(nk);
                if (old && !(nd < *old)) continue;
                auto hv = h(na, nb);
                if (!hv) continue;
                store.set(nk, nd, move_code(robot, dir));
                W f = checked_add(nd, *hv);
                pq.push({std::move(f), std::move(nd), na, nb});
            }
        }
    }
    return res;
}

/// Conservative pre-check that no path length can overflow int64.
bool distances_fit(const Coords<std::int64_t>& c, std::uint64_t n) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < c.x.size(); ++i) {
        lo = std::min({lo, c.x[i], c.y[i]});
        hi = std::max({hi, c.x[i], c.y[i]});
    }
    // Every simple path visits at most n^2 configurations and each step is at
    // most twice the coordinate span.
    const long double bound = static_cast<long double>(n) * n * 2.0L * static_cast<long double>(hi - lo) * 2.0L;
    return bound < 9.0e18L;
}

}  // namespace

std::vector<std::pair<ConfigNode, Scalar>> config_neighbors(const GridGraph& g, const ConfigNode& u) {
    std::vector<std::pair<ConfigNode, Scalar>> out;
    for (int robot = 0; robot < 2; ++robot) {
        const int from = robot == 0 ? u.ia : u.ib;
        for (int dir = 0; dir < 4; ++dir) {
            const int to = g.neighbors[from][dir];
            if (to < 0) continue;
            const ConfigNode v = robot == 0 ? ConfigNode{to, u.ib} : ConfigNode{u.ia, to};
            if (linf_dist(g.points[v.ia], g.points[v.ib]) < Scalar(1)) continue;
            out.emplace_back(v, l1_dist(g.points[from], g.points[to]));
        }
    }
    return out;
}

SearchResult shortest_plan(const FreeSpace& f, const GridGraph& g, const Config& s, const Config& t,
                           const PlannerOptions& opts) {
    if (!is_free_config(f, s)) {
        throw Error(ErrorCode::StartOrGoalNotFree, "start configuration A " + to_string(s.a) + ", B " + to_string(s.b) + " is not free");
    }
    if (!is_free_config(f, t)) {
        throw Error(ErrorCode::StartOrGoalNotFree, "goal configuration A " + to_string(t.a) + ", B " + to_string(t.b) + " is not free");
    }
    auto locate = [&](const Point& p) {
        auto idx = locate_grid_point(g, p);
        if (!idx) throw Error(ErrorCode::StartOrGoalNotOnGrid, to_string(p) + " is not a grid point");
        return *idx;
    };
    const ConfigNode sn{locate(s.a), locate(s.b)};
    const ConfigNode tn{locate(t.a), locate(t.b)};
    const std::uint64_t n = g.points.size();

    if (!opts.exact_weights) {
        if (auto c = scaled_coords(g); c && distances_fit(*c, n)) {
            try {
                SearchResult r;
                if (n * n <= opts.dense_limit) {
                    DenseStore<std::int64_t> store(n * n);
                    r = search(g, *c, sn, tn, opts.heuristic, store);
                } else {
                    HashStore<std::int64_t> store;
                    r = search(g, *c, sn, tn, opts.heuristic, store);
                }
                r.integer_weights = true;
                return r;
            } catch (const Overflow&) {
                // fall through to exact weights
            }
        }
    }
    HashStore<Scalar> store;
    return search(g, exact_coords(g), sn, tn, opts.heuristic, store);
}

DecoupledPlan extract_plan(const GridGraph& g, const SearchResult& r) {
    DecoupledPlan plan;
    if (r.node_path.empty()) return plan;
    plan.start = {g.points[r.node_path.front().ia], g.points[r.node_path.front().ib]};
    for (std::size_t k = 1; k < r.node_path.size(); ++k) {
        const ConfigNode& u = r.node_path[k - 1];
        const ConfigNode& v = r.node_path[k];
        const Robot robot = u.ia != v.ia ? Robot::A : Robot::B;
        const Point& from = g.points[robot == Robot::A ? u.ia : u.ib];
        const Point& to = g.points[robot == Robot::A ? v.ia : v.ib];
        if (plan.moves.empty() || plan.moves.back().robot != robot) plan.moves.push_back({robot, {from}});
        auto& pts = plan.moves.back().polyline;
        // Drop the previous vertex when the new step continues in the same line.
        if (pts.size() >= 2) {
            const Point& a = pts[pts.size() - 2];
            const Point& b = pts.back();
            const bool same_line = (a.x == b.x && b.x == to.x) || (a.y == b.y && b.y == to.y);
            const bool same_dir = (b.x - a.x).sign() == (to.x - b.x).sign() && (b.y - a.y).sign() == (to.y - b.y).sign();
            if (same_line && same_dir) pts.pop_back();
        }
        pts.push_back(to);
    }
    return plan;
}

std::vector<std::optional<Scalar>> grid_distances(const GridGraph& g, int src) {
    return single_source(g, exact_coords(g), src);
}

std::optional<Scalar> single_robot_shortest(const FreeSpace& f, const Point& p, const Point& q) {
    for (const Point* x : {&p, &q}) {
        if (!contains_point(f, *x)) throw Error(ErrorCode::PointNotFree, to_string(*x) + " is not in the free space");
    }
    if (p == q) return Scalar(0);
    const Point specials[] = {p, q};
    const GridGraph g = build_grid_graph(f, compute_ilines(f, specials, 0));
    const int src = *locate_grid_point(g, p);
    const int dst = *locate_grid_point(g, q);
    if (auto c = scaled_coords(g)) {
        try {
            auto d = single_source(g, *c, src)[dst];
            if (!d) return std::nullopt;
            return to_scalar(*d, *c);
        } catch (const Overflow&) {
        }
    }
    return grid_distances(g, src)[dst];
}

Planning plan_in_free_space(FreeSpace f, const Config& s, const Config& t, const PlannerOptions& opts) {
    Planning out;
    out.free_space = std::move(f);
    const Point specials[] = {s.a, s.b, t.a, t.b};
    out.lines = compute_ilines(out.free_space, specials);
    out.grid = build_grid_graph(out.free_space, out.lines);
    out.result = shortest_plan(out.free_space, out.grid, s, t, opts);
    return out;
}

Planning plan_instance(const Workspace& w, const Config& s, const Config& t, const PlannerOptions& opts) {
    return plan_in_free_space(compute_free_space(w), s, t, opts);
}

}  // namespace biplan
