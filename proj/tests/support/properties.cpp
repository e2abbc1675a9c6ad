#include "properties.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "biplan/error.hpp"
#include "biplan/hardness.hpp"
#include "biplan/io.hpp"
#include "biplan/oracle.hpp"
#include "biplan/planner.hpp"
#include "brute.hpp"

namespace biplan::laws {

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Scalar random_rational(Rng& rng) {
    std::int64_t den = uniform(rng, 1, 1000);
    return Scalar(uniform(rng, -100000, 100000), den);
}

// Small instances keep the planner-heavy laws quick.
RandomWorkspaceParams small_params(std::uint64_t seed) {
    RandomWorkspaceParams p;
    p.seed = seed;
    p.bbox = {Scalar(0), Scalar(9), Scalar(0), Scalar(9)};
    p.max_vertices = 12;
    return p;
}

struct PlannedCase {
    std::uint64_t seed;
    RandomInstance inst;
    Planning planning;
};

const std::vector<PlannedCase>& planned_cases(int n) {
    static std::vector<PlannedCase> cache;
    while (static_cast<int>(cache.size()) < n) {
        const std::uint64_t seed = 70000 + cache.size();
        RandomInstance inst = random_workspace(small_params(seed));
        Planning p = plan_instance(inst.workspace, inst.s, inst.t);
        cache.push_back({seed, std::move(inst), std::move(p)});
    }
    return cache;
}

std::vector<Point> track(const DecoupledPlan& plan, Robot r) {
    std::vector<Point> pts{r == Robot::A ? plan.start.a : plan.start.b};
    for (const auto& m : plan.moves) {
        if (m.robot == r) pts.insert(pts.end(), m.polyline.begin() + 1, m.polyline.end());
    }
    return pts;
}

Ring translated(const Ring& r, const Point& d) {
    Ring out;
    for (const auto& p : r) out.push_back(p + d);
    return out;
}

RectilinearPolygon translated(const RectilinearPolygon& poly, const Point& d) {
    RectilinearPolygon out{translated(poly.outer, d), {}};
    for (const auto& h : poly.holes) out.holes.push_back(translated(h, d));
    return out;
}

// ---- core-geometry ----

LawResult scalar_add_sub(int cases) {
    Rng rng(11);
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const Scalar a = random_rational(rng), b = random_rational(rng);
        if ((a + b) - b != a) r.fail("(a+b)-b != a for a=" + a.str() + " b=" + b.str());
    }
    return r;
}

LawResult scalar_mul_div(int cases) {
    Rng rng(12);
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const Scalar a = random_rational(rng);
        Scalar b = random_rational(rng);
        if (b == Scalar(0)) b = Scalar(7, 3);
        if (a / b * b != a) r.fail("a/b*b != a for a=" + a.str() + " b=" + b.str());
    }
    return r;
}

LawResult metric_inequalities(int cases) {
    Rng rng(13);
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const Point p{random_rational(rng), random_rational(rng)};
        const Point q{random_rational(rng), random_rational(rng)};
        const Scalar li = linf_dist(p, q), l1 = l1_dist(p, q);
        if (!(li <= l1 && l1 <= Scalar(2) * li)) r.fail("metric bound fails at " + to_string(p) + " " + to_string(q));
    }
    return r;
}

std::vector<Rect> random_rects(Rng& rng, int max_count) {
    std::vector<Rect> out;
    const int n = static_cast<int>(uniform(rng, 0, max_count));
    for (int i = 0; i < n; ++i) {
        const std::int64_t x0 = uniform(rng, 0, 10), y0 = uniform(rng, 0, 10);
        out.push_back({Scalar(x0, 2), Scalar(x0 + uniform(rng, 1, 6), 2), Scalar(y0, 2),
                       Scalar(y0 + uniform(rng, 1, 6), 2)});
    }
    return out;
}

bool in_any(const std::vector<Rect>& rs, const Point& p) {
    return std::any_of(rs.begin(), rs.end(), [&](const Rect& r) { return r.contains(p); });
}

LawResult boolean_law(BoolOp op, std::uint64_t seed, int cases) {
    Rng rng(seed);
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const auto ra = random_rects(rng, 4), rb = random_rects(rng, 4);
        const RectSet a = RectSet::from_rects(ra), b = RectSet::from_rects(rb);
        const RectSet c = rectset_boolean(op, a, b);
        for (int s = 0; s < 24; ++s) {
            // odd quarters never lie on a boundary, which sits on multiples of 1/2
            const Point p{Scalar(2 * uniform(rng, -1, 16) + 1, 4), Scalar(2 * uniform(rng, -1, 16) + 1, 4)};
            const bool ina = in_any(ra, p), inb = in_any(rb, p);
            const bool want = op == BoolOp::Union ? (ina || inb) : op == BoolOp::Intersect ? (ina && inb) : (ina && !inb);
            if (c.contains(p) != want) {
                r.fail("membership mismatch at " + to_string(p) + " case " + std::to_string(k));
                break;
            }
        }
    }
    return r;
}

LawResult dilation_laws(int cases) {
    Rng rng(17);
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const auto rs = random_rects(rng, 4);
        const RectSet a = RectSet::from_rects(rs);
        const Scalar rad(uniform(rng, 0, 6), 4);
        const RectSet d = dilate_by_square(a, rad);
        if (d.area() < a.area()) r.fail("dilation shrank area, case " + std::to_string(k));
        if (!(dilate_by_square(a, Scalar(0)) == a)) r.fail("dilation by 0 changed the set, case " + std::to_string(k));
        for (int s = 0; s < 12; ++s) {
            const Point p{Scalar(uniform(rng, -8, 40), 8), Scalar(uniform(rng, -8, 40), 8)};
            const bool want = std::any_of(rs.begin(), rs.end(), [&](const Rect& q) {
                return linf_box_dist(q, {p.x, p.x, p.y, p.y}) <= rad;
            });
            if (d.contains(p) != want) {
                r.fail("dilation membership mismatch at " + to_string(p) + " case " + std::to_string(k));
                break;
            }
        }
    }
    return r;
}

// ---- freespace ----

LawResult free_space_membership(int cases) {
    LawResult r;
    const int workspaces = 10;
    const int per = std::max(10000, cases / workspaces);
    for (int w = 0; w < workspaces; ++w) {
        RandomWorkspaceParams prm;
        prm.seed = 900 + w;
        prm.max_holes = 3;
        const RandomInstance inst = random_workspace(prm);
        const FreeSpace f = compute_free_space(inst.workspace);
        Rng rng(900 + w);
        for (int s = 0; s < per; ++s, ++r.cases) {
            const Point p{Scalar(uniform(rng, -4, 52), 4), Scalar(uniform(rng, -4, 52), 4)};
            if (contains_point(f, p) != brute::square_fits(inst.workspace.polygon(), p)) {
                r.fail("seed " + std::to_string(prm.seed) + " point " + to_string(p));
            }
        }
    }
    return r;
}

LawResult free_segments(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const RandomInstance inst = random_workspace(small_params(5000 + k));
        FreeSpace f;
        try {
            f = compute_free_space(inst.workspace);
        } catch (const std::exception& e) {
            r.fail(std::string("construction failed: ") + e.what());
            continue;
        }
        auto gaps_ok = [](const IntervalSet& sec) {
            for (std::size_t i = 0; i + 1 < sec.size(); ++i) {
                if (sec[i + 1].lo - sec[i].hi <= Scalar(1)) return false;
            }
            return true;
        };
        for (const auto* rs : {&f.region(), &f.transposed_region()}) {
            for (const auto& s : rs->line_sections()) {
                if (!gaps_ok(s)) r.fail("short gap, seed " + std::to_string(5000 + k));
            }
            for (const auto& s : rs->slab_sections()) {
                if (!gaps_ok(s)) r.fail("short gap, seed " + std::to_string(5000 + k));
            }
        }
        // independent check along one vertical and one horizontal quarter line
        Rng rng(5000 + k);
        const auto& poly = inst.workspace.polygon();
        for (int axis = 0; axis < 2; ++axis) {
            const Scalar c(uniform(rng, 0, 36), 4);
            std::optional<Scalar> last;
            for (std::int64_t i = 0; i <= 36; ++i) {
                const Scalar v(i, 4);
                const Point p = axis == 0 ? Point{c, v} : Point{v, c};
                if (!brute::square_fits(poly, p)) continue;
                if (last && v - *last <= Scalar(1)) {
                    const Point q = axis == 0 ? Point{c, *last} : Point{*last, c};
                    if (v - *last != Scalar(1, 4) || !brute::sweep_fits(poly, q, p)) {
                        r.fail("free gap of length <= 1 near " + to_string(p) + ", seed " + std::to_string(5000 + k));
                    }
                }
                last = v;
            }
        }
    }
    return r;
}

LawResult free_space_monotone(int cases) {
    LawResult r;
    Rng rng(23);
    for (int k = 0; k < cases; ++k) {
        const RandomInstance inst = random_workspace(small_params(8000 + k));
        RectilinearPolygon poly = inst.workspace.polygon();
        const std::int64_t x = uniform(rng, 1, 16), y = uniform(rng, 1, 16);
        const Scalar x0(x, 2), y0(y, 2);
        poly.holes.push_back({{x0, y0}, {x0 + Scalar(1, 2), y0}, {x0 + Scalar(1, 2), y0 + Scalar(1)}, {x0, y0 + Scalar(1)}});
        std::optional<Workspace> shrunk;
        try {
            shrunk.emplace(poly);
        } catch (const Error&) {
            // hole outside or touching: the law needs a valid smaller workspace
            --k;
            continue;
        }
        ++r.cases;
        const FreeSpace f = compute_free_space(inst.workspace);
        const FreeSpace g = compute_free_space(*shrunk);
        if (!rectset_boolean(BoolOp::Difference, g.region(), f.region()).empty()) {
            r.fail("free space grew, seed " + std::to_string(8000 + k));
        }
    }
    return r;
}

// ---- grid ----

struct GridCase {
    RandomInstance inst;
    FreeSpace f;
    GridLines lines;
    GridGraph g;
};

GridCase grid_case(std::uint64_t seed) {
    RandomInstance inst = random_workspace(small_params(seed));
    FreeSpace f = compute_free_space(inst.workspace);
    const std::vector<Point> sp{inst.s.a, inst.s.b, inst.t.a, inst.t.b};
    GridLines lines = compute_ilines(f, sp);
    GridGraph g = build_grid_graph(f, lines);
    return {std::move(inst), std::move(f), std::move(lines), std::move(g)};
}

LawResult grid_specials(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const GridCase c = grid_case(11000 + k);
        for (const Point* p : {&c.inst.s.a, &c.inst.s.b, &c.inst.t.a, &c.inst.t.b}) {
            if (!locate_grid_point(c.g, *p)) r.fail("special " + to_string(*p) + " off grid, seed " + std::to_string(11000 + k));
            if (c.lines.horizontal_level(p->y) != 0 || c.lines.vertical_level(p->x) != 0) {
                r.fail("special " + to_string(*p) + " not on 0-lines");
            }
        }
    }
    return r;
}

LawResult grid_boundary_vertices(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const GridCase c = grid_case(12000 + k);
        for (const auto* edges : {&c.f.horizontal_edges(), &c.f.vertical_edges()}) {
            for (const auto& e : *edges) {
                for (const Point* p : {&e.a, &e.b}) {
                    if (!locate_grid_point(c.g, *p)) {
                        r.fail("boundary vertex " + to_string(*p) + " off grid, seed " + std::to_string(12000 + k));
                    }
                }
            }
        }
        for (const auto& e : c.f.horizontal_edges()) {
            if (c.lines.horizontal_level(e.a.y) != 0) r.fail("horizontal edge not on a 0-line");
        }
        for (const auto& e : c.f.vertical_edges()) {
            if (c.lines.vertical_level(e.a.x) != 0) r.fail("vertical edge not on a 0-line");
        }
    }
    return r;
}

LawResult grid_edges(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const GridCase c = grid_case(13000 + k);
        const auto& poly = c.inst.workspace.polygon();
        const std::string where = ", seed " + std::to_string(13000 + k);
        for (std::size_t i = 0; i < c.g.points.size(); ++i) {
            for (int d = 0; d < 4; ++d) {
                const int j = c.g.neighbors[i][d];
                if (j < 0) continue;
                if (c.g.neighbors[j][opposite(static_cast<Direction>(d))] != static_cast<int>(i)) {
                    r.fail("asymmetric adjacency" + where);
                }
                const Point& p = c.g.points[i];
                const Point& q = c.g.points[j];
                if (!segment_in_free(c.f, p, q)) r.fail("edge leaves F" + where);
                if (d < 2 && !brute::sweep_fits(poly, p, q)) r.fail("edge sweep leaves workspace" + where);
                const bool horizontal = d % 2 == 0;
                if ((horizontal && (p.y != q.y || std::abs(c.g.col[i] - c.g.col[j]) != 1 || c.g.row[i] != c.g.row[j])) ||
                    (!horizontal && (p.x != q.x || std::abs(c.g.row[i] - c.g.row[j]) != 1 || c.g.col[i] != c.g.col[j]))) {
                    r.fail("edge skips a grid line" + where);
                }
            }
        }
    }
    return r;
}

LawResult grid_line_counts(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const GridCase c = grid_case(14000 + k);
        if (c.lines.horizontal.size() > 5 * c.f.horizontal_edges().size() + 20 ||
            c.lines.vertical.size() > 5 * c.f.vertical_edges().size() + 20) {
            r.fail("too many lines, seed " + std::to_string(14000 + k));
        }
    }
    return r;
}

// ---- planner ----

LawResult planner_lower_bound(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        const auto& f = c.planning.free_space;
        const auto da = single_robot_shortest(f, c.inst.s.a, c.inst.t.a);
        const auto db = single_robot_shortest(f, c.inst.s.b, c.inst.t.b);
        const bool optimal = c.planning.result.status == SearchStatus::Optimal;
        if (!da || !db) {
            if (optimal) r.fail("plan found although a robot cannot reach its goal, seed " + std::to_string(c.seed));
            continue;
        }
        if (optimal && c.planning.result.cost < *da + *db) r.fail("cost below lower bound, seed " + std::to_string(c.seed));
    }
    return r;
}

LawResult planner_symmetry(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        const Config s{c.inst.s.b, c.inst.s.a}, t{c.inst.t.b, c.inst.t.a};
        const Planning p = plan_in_free_space(c.planning.free_space, s, t);
        const auto& q = c.planning.result;
        if (p.result.status != q.status || (q.status == SearchStatus::Optimal && p.result.cost != q.cost)) {
            r.fail("label swap changed the result, seed " + std::to_string(c.seed));
        }
    }
    return r;
}

LawResult planner_translation(int cases) {
    LawResult r;
    Rng rng(29);
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        const Point d{Scalar(uniform(rng, -7, 7)), Scalar(uniform(rng, -7, 7))};
        const Workspace w(translated(c.inst.workspace.polygon(), d));
        const Config s{c.inst.s.a + d, c.inst.s.b + d}, t{c.inst.t.a + d, c.inst.t.b + d};
        const Planning p = plan_instance(w, s, t);
        const auto& q = c.planning.result;
        if (p.result.status != q.status || (q.status == SearchStatus::Optimal && p.result.cost != q.cost)) {
            r.fail("translation by " + to_string(d) + " changed the result, seed " + std::to_string(c.seed));
        }
    }
    return r;
}

LawResult planner_refinement(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        const auto refined = refined_plan_cost(c.planning.free_space, c.inst.s, c.inst.t, 0);
        const auto& q = c.planning.result;
        const std::optional<Scalar> base =
            q.status == SearchStatus::Optimal ? std::optional<Scalar>(q.cost) : std::nullopt;
        if (refined != base) r.fail("refined grid disagrees, seed " + std::to_string(c.seed));
    }
    return r;
}

LawResult planner_edge_feasibility(int cases) {
    LawResult r;
    Rng rng(31);
    const Scalar one(1);
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        const GridGraph& g = c.planning.grid;
        const auto& f = c.planning.free_space;
        std::vector<ConfigNode> probes = c.planning.result.node_path;
        for (int k = 0; k < 8 && g.points.size() > 1; ++k) {
            const int a = static_cast<int>(uniform(rng, 0, g.points.size() - 1));
            const int b = static_cast<int>(uniform(rng, 0, g.points.size() - 1));
            if (linf_dist(g.points[a], g.points[b]) >= one) probes.push_back({a, b});
        }
        for (const auto& u : probes) {
            for (const auto& [v, w] : config_neighbors(g, u)) {
                const bool moves_a = v.ia != u.ia;
                const Point& p = g.points[moves_a ? u.ia : u.ib];
                const Point& q = g.points[moves_a ? v.ia : v.ib];
                const Point& parked = g.points[moves_a ? u.ib : u.ia];
                if ((moves_a ? v.ib != u.ib : v.ia != u.ia) || !segment_in_free(f, p, q) ||
                    brute::min_separation(p, q, parked) < one || w != l1_dist(p, q)) {
                    r.fail("bad configuration edge, seed " + std::to_string(c.seed));
                }
            }
        }
    }
    return r;
}

// ---- plan-model ----

LawResult plan_cost_matches(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        if (c.planning.result.status != SearchStatus::Optimal) continue;
        const DecoupledPlan plan = extract_plan(c.planning.grid, c.planning.result);
        if (plan_cost(plan) != c.planning.result.cost) r.fail("extracted cost differs, seed " + std::to_string(c.seed));
    }
    return r;
}

LawResult timed_after_decoupled(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        if (c.planning.result.status != SearchStatus::Optimal) continue;
        const auto& f = c.planning.free_space;
        const DecoupledPlan plan = extract_plan(c.planning.grid, c.planning.result);
        if (!validate_decoupled(f, plan, c.inst.t).ok) {
            r.fail("planner output fails validation, seed " + std::to_string(c.seed));
            continue;
        }
        if (!validate_timed(f, to_timed(plan), c.inst.s, c.inst.t).ok) {
            r.fail("timed form fails validation, seed " + std::to_string(c.seed));
        }
    }
    return r;
}

LawResult mutation_rejection(int cases) {
    // A dips into a U-shape that passes exactly at l-infinity distance 1 from
    // parked B; pushing the bottom of the U further towards B must be caught.
    LawResult r;
    Rng rng(37);
    const Scalar one(1);
    const RectilinearPolygon room{{{Scalar(0), Scalar(0)}, {Scalar(30), Scalar(0)}, {Scalar(30), Scalar(30)},
                                   {Scalar(0), Scalar(30)}},
                                  {}};
    const FreeSpace f = compute_free_space(Workspace(room));
    const Point centre{Scalar(15), Scalar(15)};
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const Point b{centre.x + Scalar(uniform(rng, -8, 8), 4), centre.y + Scalar(uniform(rng, -8, 8), 4)};
        const Scalar lo = b.x - Scalar(uniform(rng, -3, 12), 4);
        const Scalar hi = max(lo, b.x + Scalar(uniform(rng, -3, 12), 4));
        const Scalar depth(uniform(rng, 4, 20), 4);
        const Scalar delta(uniform(rng, 1, 16), 16);
        const int rot = static_cast<int>(uniform(rng, 0, 3));
        // build in a frame where B is below the U, then rotate about B
        auto place = [&](const Scalar& u, const Scalar& v) {
            const Scalar du = u - b.x, dv = v - b.y;
            switch (rot) {
                case 0: return Point{b.x + du, b.y + dv};
                case 1: return Point{b.x - dv, b.y + du};
                case 2: return Point{b.x - du, b.y - dv};
                default: return Point{b.x + dv, b.y - du};
            }
        };
        auto plan_with = [&](const Scalar& bottom) {
            const Point a0 = place(lo, bottom + depth);
            DecoupledPlan p{{a0, b}, {}};
            p.moves.push_back({Robot::A, {a0, place(lo, bottom), place(hi, bottom), place(hi, bottom + depth)}});
            return p;
        };
        const bool overlaps = lo < b.x + one && hi > b.x - one;
        const ValidationReport tight = validate_decoupled(f, plan_with(b.y + one));
        if (!tight.ok) r.fail("tight plan rejected, case " + std::to_string(k));
        const ValidationReport pushed = validate_decoupled(f, plan_with(b.y + one - delta));
        if (overlaps != pushed.has(ViolationKind::RobotCollision)) {
            r.fail("mutation by " + delta.str() + " not classified correctly, case " + std::to_string(k));
        }
    }
    return r;
}

LawResult simultaneous_not_slower(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        if (c.planning.result.status != SearchStatus::Optimal) continue;
        const DecoupledPlan plan = extract_plan(c.planning.grid, c.planning.result);
        const TimedPlan sim = simultaneous_unit_speed(track(plan, Robot::A), track(plan, Robot::B));
        if (makespan(sim) > plan_cost(plan)) r.fail("simultaneous plan slower, seed " + std::to_string(c.seed));
    }
    return r;
}

// ---- oracle ----

LawResult oracle_hole_monotone(int cases) {
    LawResult r;
    Rng rng(41);
    for (std::uint64_t seed = 21000; r.cases < static_cast<std::uint64_t>(cases); ++seed) {
        const RandomInstance inst = random_workspace(small_params(seed));
        RectilinearPolygon poly = inst.workspace.polygon();
        const std::int64_t x = uniform(rng, 1, 16), y = uniform(rng, 1, 16);
        const Scalar x0(x, 2), y0(y, 2);
        poly.holes.push_back({{x0, y0}, {x0 + Scalar(1, 2), y0}, {x0 + Scalar(1, 2), y0 + Scalar(1, 2)},
                              {x0, y0 + Scalar(1, 2)}});
        std::optional<Workspace> w;
        try {
            w.emplace(poly);
        } catch (const Error&) {
            continue;
        }
        const FreeSpace g = compute_free_space(*w);
        if (!is_free_config(g, inst.s) || !is_free_config(g, inst.t)) continue;
        ++r.cases;
        const Planning before = plan_instance(inst.workspace, inst.s, inst.t);
        const Planning after = plan_in_free_space(g, inst.s, inst.t);
        if (after.result.status == SearchStatus::Optimal &&
            (before.result.status != SearchStatus::Optimal || after.result.cost < before.result.cost)) {
            r.fail("adding a hole made the plan cheaper, seed " + std::to_string(seed));
        }
    }
    return r;
}

// ---- hardness ----

std::vector<std::int64_t> random_values(Rng& rng, int m) {
    std::vector<std::int64_t> v;
    for (int i = 0; i < m; ++i) v.push_back(uniform(rng, 1, 9));
    return v;
}

LawResult gadget_metrics(int cases) {
    LawResult r;
    Rng rng(43);
    while (r.cases < static_cast<std::uint64_t>(cases)) {
        const ScaledInstance y = scale_instance({random_values(rng, static_cast<int>(uniform(rng, 1, 4)))});
        const HardnessInstance inst = build_hardness_workspace(y, false);
        for (std::size_t i = 0; i < y.y.size(); ++i, ++r.cases) {
            const GadgetMeasurement m = measure_gadget(inst, y, i);
            const Scalar through = Scalar(11) - y.y[i];
            if (m.shortest_a != through || m.shortest_b != through || m.avoiding_a != Scalar(11) ||
                m.avoiding_b != Scalar(11) || m.gate_length != Scalar(2) - y.y[i] ||
                m.stub_length != y.y[i] / Scalar(2) || m.gate_clearance >= Scalar(1)) {
                r.fail("gadget metric off for y=" + y.y[i].str());
            }
        }
    }
    return r;
}

LawResult valid_partition_makespan(int cases) {
    LawResult r;
    Rng rng(47);
    for (int k = 0; k < cases; ++k, ++r.cases) {
        // two halves with equal sums
        std::vector<std::int64_t> left = random_values(rng, static_cast<int>(uniform(rng, 1, 3)));
        std::int64_t rest = 0;
        for (auto v : left) rest += v;
        std::vector<std::int64_t> right;
        while (rest > 0) {
            const std::int64_t v = uniform(rng, 1, rest);
            right.push_back(v);
            rest -= v;
        }
        std::vector<std::int64_t> values;
        std::vector<std::size_t> ya, yb;
        std::vector<int> order(left.size() + right.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const int o = order[i];
            if (o < static_cast<int>(left.size())) {
                values.push_back(left[o]);
                ya.push_back(i);
            } else {
                values.push_back(right[o - left.size()]);
                yb.push_back(i);
            }
        }
        const ScaledInstance y = scale_instance({values});
        const HardnessInstance inst = build_hardness_workspace(y, false);
        const TimedPlan tp = plan_from_partition(inst.layouts, y, ya, yb);
        const Scalar want = Scalar(11 * static_cast<std::int64_t>(values.size())) - Scalar(1, 2);
        if (makespan(tp) != want) r.fail("makespan " + makespan(tp).str() + " != " + want.str());
        if (!validate_timed(compute_free_space(inst.workspace), tp, inst.s, inst.t).ok) {
            r.fail("partition plan fails validation, case " + std::to_string(k));
        }
    }
    return r;
}

LawResult gate_collision(int cases) {
    LawResult r;
    Rng rng(53);
    while (r.cases < static_cast<std::uint64_t>(cases)) {
        const ScaledInstance y = scale_instance({random_values(rng, static_cast<int>(uniform(rng, 1, 3)))});
        const HardnessInstance inst = build_hardness_workspace(y, false);
        const FreeSpace f = compute_free_space(inst.workspace);
        for (const auto& l : inst.layouts) {
            ++r.cases;
            const ValidationReport rep = validate_timed(f, simultaneous_unit_speed(l.pi_a, l.pi_b));
            if (!rep.has(ViolationKind::RobotCollision)) r.fail("both robots crossed one gate together");
        }
    }
    return r;
}

LawResult gadget_vertex_count(int cases) {
    LawResult r;
    Rng rng(59);
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const int m = static_cast<int>(uniform(rng, 1, 12));
        const ScaledInstance y = scale_instance({random_values(rng, m)});
        const HardnessInstance inst = build_hardness_workspace(y, false);
        if (inst.workspace.n() > static_cast<std::size_t>(20 * m)) {
            r.fail(std::to_string(inst.workspace.n()) + " vertices for m=" + std::to_string(m));
        }
    }
    return r;
}

// ---- cli-io ----

LawResult workspace_roundtrip(int cases) {
    LawResult r;
    for (int k = 0; k < cases; ++k, ++r.cases) {
        const RandomInstance inst = random_workspace(small_params(31000 + k));
        WorkspaceFile wf{inst.workspace.polygon(), inst.s, inst.t, std::nullopt, {}, nullptr, std::nullopt};
        if (k % 3 == 0) wf.t_max = Scalar(k + 1, 7);
        const Json j = workspace_to_json(wf);
        const WorkspaceFile back = workspace_from_json(Json::parse(dump(j)));
        if (!(back == wf)) r.fail("workspace round trip differs, case " + std::to_string(k));
        if (dump(workspace_to_json(back)) != dump(j)) r.fail("serialization not deterministic");
    }
    return r;
}

LawResult plan_roundtrip(int cases) {
    LawResult r;
    for (const auto& c : planned_cases(cases)) {
        ++r.cases;
        if (c.planning.result.status != SearchStatus::Optimal) continue;
        const DecoupledPlan plan = extract_plan(c.planning.grid, c.planning.result);
        PlanFile pf = plan_file_from(plan, c.planning.result.cost);
        pf.timed = to_timed(plan);
        const Json j = plan_to_json(pf);
        const PlanFile back = plan_from_json(Json::parse(dump(j)));
        if (!(back == pf) || decoupled_from(back, c.inst.s) != plan) {
            r.fail("plan round trip differs, seed " + std::to_string(c.seed));
        }
    }
    return r;
}

}  // namespace

const std::vector<Law>& all_laws() {
    static const std::vector<Law> laws = {
        {"core-geometry", "scalar (a+b)-b == a", scalar_add_sub},
        {"core-geometry", "scalar a/b*b == a", scalar_mul_div},
        {"core-geometry", "linf <= l1 <= 2 linf", metric_inequalities},
        {"core-geometry", "union membership", [](int n) { return boolean_law(BoolOp::Union, 19, n); }},
        {"core-geometry", "intersection membership", [](int n) { return boolean_law(BoolOp::Intersect, 20, n); }},
        {"core-geometry", "difference membership", [](int n) { return boolean_law(BoolOp::Difference, 21, n); }},
        {"core-geometry", "dilation grows area, r=0 is identity", dilation_laws},
        {"freespace", "membership matches square-in-polygon", free_space_membership},
        {"freespace", "free-segment gaps exceed 1", free_segments},
        {"freespace", "shrinking the workspace never grows F", free_space_monotone},
        {"grid", "start and goal points are grid points", grid_specials},
        {"grid", "boundary vertices are grid points", grid_boundary_vertices},
        {"grid", "grid edges lie in F and join consecutive lines", grid_edges},
        {"grid", "line counts are linear in the edge count", grid_line_counts},
        {"planner", "cost >= sum of single-robot distances", planner_lower_bound},
        {"planner", "label swap leaves the cost unchanged", planner_symmetry},
        {"planner", "integer translation leaves the cost unchanged", planner_translation},
        {"planner", "refined grid gives the same cost", planner_refinement},
        {"planner", "configuration edges are collision free", planner_edge_feasibility},
        {"plan-model", "extracted plan cost equals search cost", plan_cost_matches},
        {"plan-model", "valid decoupled plan stays valid when timed", timed_after_decoupled},
        {"plan-model", "pushing a tight vertex towards the partner is rejected", mutation_rejection},
        {"plan-model", "simultaneous makespan <= decoupled cost", simultaneous_not_slower},
        {"oracle", "adding a hole never lowers the cost", oracle_hole_monotone},
        {"hardness", "gadget path lengths and gate size", gadget_metrics},
        {"hardness", "valid partition plan has makespan 11m-1/2", valid_partition_makespan},
        {"hardness", "both robots through one gate collide", gate_collision},
        {"hardness", "vertex count linear in m", gadget_vertex_count},
        {"cli-io", "workspace files round trip", workspace_roundtrip},
        {"cli-io", "plan files round trip", plan_roundtrip},
    };
    return laws;
}

}  // namespace biplan::laws
