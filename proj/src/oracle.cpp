#include "biplan/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <random>

#include "biplan/error.hpp"

namespace biplan {

std::optional<Scalar> refined_plan_cost(const FreeSpace& f, const Config& s, const Config& t, int extra_levels) {
    const Point specials[] = {s.a, s.b, t.a, t.b};
    const int top = 2 + extra_levels;
    GridLines lines = compute_ilines(f, specials, top);
    auto with_midpoints = [top](const std::vector<GridLine>& v) {
        std::vector<GridLine> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out.push_back(v[i]);
            if (i + 1 < v.size()) out.push_back({(v[i].coord + v[i + 1].coord) / Scalar(2), top + 1});
        }
        return out;
    };
    lines.horizontal = with_midpoints(lines.horizontal);
    lines.vertical = with_midpoints(lines.vertical);
    const GridGraph g = build_grid_graph(f, lines);
    const SearchResult r = shortest_plan(f, g, s, t);
    if (r.status != SearchStatus::Optimal) return std::nullopt;
    return r.cost;
}

std::uint64_t dense_node_budget() {
    if (const char* env = std::getenv("BIPLAN_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 5'000'000;
}

std::optional<Scalar> dense_coupled_cost(const FreeSpace& f, const Config& s, const Config& t, const Scalar& spacing,
                                         std::optional<std::uint64_t> budget) {
    if (spacing.sign() <= 0 || !Scalar(1, 2).is_multiple_of(spacing)) {
        throw Error(ErrorCode::SpacingViolation, "spacing " + spacing.str() + " does not divide 1/2");
    }
    auto on_lattice = [&](const Scalar& v) {
        if (!v.is_multiple_of(spacing)) {
            throw Error(ErrorCode::SpacingViolation, "coordinate " + v.str() + " is not a multiple of " + spacing.str());
        }
    };
    for (const auto& x : f.region().breakpoints()) on_lattice(x);
    for (const auto* sections : {&f.region().line_sections(), &f.region().slab_sections()}) {
        for (const auto& sec : *sections) {
            for (const auto& iv : sec) {
                on_lattice(iv.lo);
                on_lattice(iv.hi);
            }
        }
    }
    for (const Point* p : {&s.a, &s.b, &t.a, &t.b}) {
        on_lattice(p->x);
        on_lattice(p->y);
    }
    if (!is_free_config(f, s) || !is_free_config(f, t)) {
        throw Error(ErrorCode::StartOrGoalNotFree, "start or goal configuration is not free");
    }
    if (s == t) return Scalar(0);

    const Rect box = *f.region().bounds();
    auto idx = [&](const Scalar& v) { return (v / spacing).num().get_si(); };
    const long i0 = idx(box.x_lo), i1 = idx(box.x_hi);
    const long j0 = idx(box.y_lo), j1 = idx(box.y_hi);
    const long w = i1 - i0 + 1;
    const long h = j1 - j0 + 1;
    std::vector<int> id(static_cast<std::size_t>(w * h), -1);
    std::vector<std::pair<long, long>> pts;
    for (long i = i0; i <= i1; ++i) {
        const IntervalSet& sec = f.region().section_at(Scalar(i) * spacing);
        for (long j = j0; j <= j1; ++j) {
            if (intervals::contains(sec, Scalar(j) * spacing)) {
                id[(i - i0) * h + (j - j0)] = static_cast<int>(pts.size());
                pts.push_back({i, j});
            }
        }
    }
    const std::uint64_t n = pts.size();
    const std::uint64_t cap = budget.value_or(dense_node_budget());
    if (n * n > cap) {
        throw Error(ErrorCode::CapacityExceeded,
                    "dense oracle needs " + std::to_string(n * n) + " pairs, budget is " + std::to_string(cap));
    }
    std::vector<std::array<int, 4>> nbr(n, {-1, -1, -1, -1});
    const long di[] = {1, 0, -1, 0};
    const long dj[] = {0, 1, 0, -1};
    for (std::size_t k = 0; k < n; ++k) {
        const auto [i, j] = pts[k];
        for (int d = 0; d < 4; ++d) {
            const long ni = i + di[d], nj = j + dj[d];
            if (ni < i0 || ni > i1 || nj < j0 || nj > j1) continue;
            const int o = id[(ni - i0) * h + (nj - j0)];
            if (o < 0) continue;
            const Point p{Scalar(i) * spacing, Scalar(j) * spacing};
            const Point q{Scalar(ni) * spacing, Scalar(nj) * spacing};
            if (segment_in_free(f, p, q)) nbr[k][d] = o;
        }
    }
    // 1/h is an integer because h divides 1/2.
    const long unit = (Scalar(1) / spacing).num().get_si();
    auto separated = [&](int a, int b) {
        return std::labs(pts[a].first - pts[b].first) >= unit || std::labs(pts[a].second - pts[b].second) >= unit;
    };
    auto locate = [&](const Point& p) { return id[(idx(p.x) - i0) * h + (idx(p.y) - j0)]; };
    const std::uint64_t src = static_cast<std::uint64_t>(locate(s.a)) * n + locate(s.b);
    const std::uint64_t dst = static_cast<std::uint64_t>(locate(t.a)) * n + locate(t.b);

    // Lattice coordinates are multiples of h and so are the parked robot's
    // coordinates +-1, so a single step of length h cannot jump over the
    // forbidden band: checking both ends of a step suffices.
    std::vector<std::int32_t> dist(n * n, -1);
    std::deque<std::uint64_t> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        const std::uint64_t u = queue.front();
        queue.pop_front();
        if (u == dst) return Scalar(dist[u]) * spacing;
        const int a = static_cast<int>(u / n);
        const int b = static_cast<int>(u % n);
        for (int d = 0; d < 4; ++d) {
            if (int na = nbr[a][d]; na >= 0 && separated(na, b)) {
                const std::uint64_t v = static_cast<std::uint64_t>(na) * n + b;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
            if (int nb = nbr[b][d]; nb >= 0 && separated(a, nb)) {
                const std::uint64_t v = static_cast<std::uint64_t>(a) * n + nb;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return uniform(0, 1) == 1; }

    /// A multiple of 1/2 in [lo, hi]; requires the range to contain one.
    Scalar half(const Scalar& lo, const Scalar& hi) {
        const long a = (lo * Scalar(2)).ceil().num().get_si();
        const long b = (hi * Scalar(2)).floor().num().get_si();
        return Scalar(uniform(a, b), 2);
    }

private:
    std::mt19937_64 rng_;
};

struct Bite {
    Scalar lo;
    Scalar hi;
    Scalar depth;
};

RectilinearPolygon sample_polygon(Sampler& rng, const RandomWorkspaceParams& prm, int budget) {
    const Scalar half(1, 2);
    const Rect& bb = prm.bbox;
    // outer box usually spans most of bbox
    const Scalar qx = (bb.x_hi - bb.x_lo - Scalar(2)) / Scalar(3);
    const Scalar qy = (bb.y_hi - bb.y_lo - Scalar(2)) / Scalar(3);
    const Scalar x0 = rng.half(bb.x_lo, bb.x_lo + qx);
    const Scalar x1 = rng.half(max(x0 + Scalar(2), bb.x_hi - qx), bb.x_hi);
    const Scalar y0 = rng.half(bb.y_lo, bb.y_lo + qy);
    const Scalar y1 = rng.half(max(y0 + Scalar(2), bb.y_hi - qy), bb.y_hi);
    const Scalar w = x1 - x0;
    const Scalar h = y1 - y0;

    int holes = 0;
    const int max_holes = std::min(prm.max_holes, (budget - 4) / 4);
    if (max_holes >= prm.min_holes) holes = static_cast<int>(rng.uniform(prm.min_holes, max_holes));
    int remaining = budget - 4 - 4 * holes;

    // corners: 0 BL, 1 BR, 2 TR, 3 TL; edges: 0 bottom, 1 right, 2 top, 3 left
    std::array<std::optional<std::pair<Scalar, Scalar>>, 4> notch;
    std::array<std::vector<Bite>, 4> bites;
    for (int guard = 0; remaining >= 2 && guard < 32; ++guard) {
        const bool want_bite = remaining >= 4 && rng.coin();
        if (!want_bite) {
            const int c = static_cast<int>(rng.uniform(0, 3));
            if (notch[c]) continue;
            notch[c] = {rng.half(half, w / Scalar(2) - half), rng.half(half, h / Scalar(2) - half)};
            remaining -= 2;
        } else {
            const int e = static_cast<int>(rng.uniform(0, 3));
            const bool horizontal = e % 2 == 0;
            const Scalar& lo = horizontal ? x0 : y0;
            const Scalar& len = horizontal ? w : h;
            const Scalar& across = horizontal ? h : w;
            if (len < Scalar(2)) continue;
            const Scalar a = rng.half(lo + half, lo + len - Scalar(1));
            const Scalar b = rng.half(a + half, lo + len - half);
            bites[e].push_back({a, b, rng.half(half, across / Scalar(2) - half)});
            remaining -= 4;
        }
    }
    std::sort(bites[0].begin(), bites[0].end(), [](const Bite& p, const Bite& q) { return p.lo < q.lo; });
    std::sort(bites[1].begin(), bites[1].end(), [](const Bite& p, const Bite& q) { return p.lo < q.lo; });
    std::sort(bites[2].begin(), bites[2].end(), [](const Bite& p, const Bite& q) { return p.lo > q.lo; });
    std::sort(bites[3].begin(), bites[3].end(), [](const Bite& p, const Bite& q) { return p.lo > q.lo; });

    Ring ring;
    if (notch[0]) {
        const auto& [a, b] = *notch[0];
        ring.insert(ring.end(), {{x0, y0 + b}, {x0 + a, y0 + b}, {x0 + a, y0}});
    } else {
        ring.push_back({x0, y0});
    }
    for (const auto& bt : bites[0]) {
        ring.insert(ring.end(), {{bt.lo, y0}, {bt.lo, y0 + bt.depth}, {bt.hi, y0 + bt.depth}, {bt.hi, y0}});
    }
    if (notch[1]) {
        const auto& [a, b] = *notch[1];
        ring.insert(ring.end(), {{x1 - a, y0}, {x1 - a, y0 + b}, {x1, y0 + b}});
    } else {
        ring.push_back({x1, y0});
    }
    for (const auto& bt : bites[1]) {
        ring.insert(ring.end(), {{x1, bt.lo}, {x1 - bt.depth, bt.lo}, {x1 - bt.depth, bt.hi}, {x1, bt.hi}});
    }
    if (notch[2]) {
        const auto& [a, b] = *notch[2];
        ring.insert(ring.end(), {{x1, y1 - b}, {x1 - a, y1 - b}, {x1 - a, y1}});
    } else {
        ring.push_back({x1, y1});
    }
    for (const auto& bt : bites[2]) {
        ring.insert(ring.end(), {{bt.hi, y1}, {bt.hi, y1 - bt.depth}, {bt.lo, y1 - bt.depth}, {bt.lo, y1}});
    }
    if (notch[3]) {
        const auto& [a, b] = *notch[3];
        ring.insert(ring.end(), {{x0 + a, y1}, {x0 + a, y1 - b}, {x0, y1 - b}});
    } else {
        ring.push_back({x0, y1});
    }
    for (const auto& bt : bites[3]) {
        ring.insert(ring.end(), {{x0, bt.hi}, {x0 + bt.depth, bt.hi}, {x0 + bt.depth, bt.lo}, {x0, bt.lo}});
    }

    RectilinearPolygon poly{std::move(ring), {}};
    std::vector<Rect> placed;
    for (int k = 0, tries = 0; k < holes && tries < 64; ++tries) {
        const Scalar hx0 = rng.half(x0 + half, x1 - Scalar(1));
        const Scalar hx1 = rng.half(hx0 + half, min(x1 - half, hx0 + Scalar(3)));
        const Scalar hy0 = rng.half(y0 + half, y1 - Scalar(1));
        const Scalar hy1 = rng.half(hy0 + half, min(y1 - half, hy0 + Scalar(3)));
        const Rect r{hx0, hx1, hy0, hy1};
        const bool clash = std::any_of(placed.begin(), placed.end(), [&](const Rect& o) {
            return r.x_lo <= o.x_hi && o.x_lo <= r.x_hi && r.y_lo <= o.y_hi && o.y_lo <= r.y_hi;
        });
        if (clash) continue;
        placed.push_back(r);
        poly.holes.push_back({{hx0, hy0}, {hx1, hy0}, {hx1, hy1}, {hx0, hy1}});
        ++k;
    }
    return poly;
}

std::optional<Config> sample_config(Sampler& rng, const std::vector<Point>& pts) {
    for (int tries = 0; tries < 64; ++tries) {
        const Point& a = pts[rng.uniform(0, static_cast<long>(pts.size()) - 1)];
        const Point& b = pts[rng.uniform(0, static_cast<long>(pts.size()) - 1)];
        if (linf_dist(a, b) >= Scalar(1)) return Config{a, b};
    }
    return std::nullopt;
}

}  // namespace

RandomInstance random_workspace(const RandomWorkspaceParams& prm) {
    if (prm.max_vertices < 4) throw Error(ErrorCode::GenerationExhausted, "max_vertices must be at least 4");
    if (prm.bbox.x_hi - prm.bbox.x_lo < Scalar(2) || prm.bbox.y_hi - prm.bbox.y_lo < Scalar(2)) {
        throw Error(ErrorCode::GenerationExhausted, "bounding box is smaller than 2x2");
    }
    Sampler rng(prm.seed);
    const Scalar half(1, 2);
    for (int attempt = 0; attempt < prm.max_attempts; ++attempt) {
        const int budget = prm.fill_vertices ? prm.max_vertices : static_cast<int>(rng.uniform(4, prm.max_vertices));
        RectilinearPolygon poly = sample_polygon(rng, prm, budget);
        std::optional<Workspace> w;
        try {
            w.emplace(std::move(poly));
        } catch (const Error&) {
            continue;
        }
        if (static_cast<int>(w->n()) > prm.max_vertices) continue;
        if (static_cast<int>(w->polygon().holes.size()) < prm.min_holes) continue;
        if (prm.fill_vertices && static_cast<int>(w->n()) != prm.max_vertices) continue;
        const FreeSpace f = compute_free_space(*w);
        if (f.empty()) continue;
        std::vector<Point> lattice;
        const Rect box = *f.region().bounds();
        for (Scalar x = (box.x_lo * Scalar(2)).ceil(); x <= box.x_hi * Scalar(2); x += Scalar(1)) {
            const Scalar px = x * half;
            const IntervalSet& sec = f.region().section_at(px);
            for (Scalar y = (box.y_lo * Scalar(2)).ceil(); y <= box.y_hi * Scalar(2); y += Scalar(1)) {
                if (intervals::contains(sec, y * half)) lattice.push_back({px, y * half});
            }
        }
        if (lattice.size() < 2) continue;
        auto s = sample_config(rng, lattice);
        auto t = sample_config(rng, lattice);
        if (!s || !t) continue;
        if (rng.uniform(0, 3) == 0) t = Config{s->b, s->a};
        return RandomInstance{std::move(*w), *s, *t};
    }
    throw Error(ErrorCode::GenerationExhausted,
                "no valid instance after " + std::to_string(prm.max_attempts) + " attempts (seed " +
                    std::to_string(prm.seed) + ")");
}

}  // namespace biplan
