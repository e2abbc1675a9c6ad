#include "biplan/plan_model.hpp"

#include <algorithm>

#include "biplan/error.hpp"

namespace biplan {

const char* robot_name(Robot r) { return r == Robot::A ? "A" : "B"; }

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::OutsideFree: return "OutsideFree";
        case ViolationKind::RobotCollision: return "RobotCollision";
        case ViolationKind::Discontinuity: return "Discontinuity";
        case ViolationKind::Overspeed: return "Overspeed";
        case ViolationKind::NonRectilinear: return "NonRectilinear";
        case ViolationKind::GoalMismatch: return "GoalMismatch";
        case ViolationKind::CostMismatch: return "CostMismatch";
    }
    return "Unknown";
}

bool ValidationReport::has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
}

namespace {

Point& position_of(Config& c, Robot r) { return r == Robot::A ? c.a : c.b; }

std::string separation_witness(const Point& a, const Point& b, const Scalar& d) {
    return "A at " + to_string(a) + ", B at " + to_string(b) + ", separation " + d.str();
}

}  // namespace

Config final_config(const DecoupledPlan& p) {
    Config cur = p.start;
    for (std::size_t i = 0; i < p.moves.size(); ++i) {
        const Move& m = p.moves[i];
        if (m.polyline.empty()) continue;
        Point& pos = position_of(cur, m.robot);
        if (m.polyline.front() != pos) {
            throw Error(ErrorCode::DiscontinuousPlan, "move " + std::to_string(i) + " of robot " +
                                                          robot_name(m.robot) + " starts at " +
                                                          to_string(m.polyline.front()) + " but the robot is at " +
                                                          to_string(pos));
        }
        pos = m.polyline.back();
    }
    return cur;
}

Scalar plan_cost(const DecoupledPlan& p) {
    final_config(p);
    Scalar total(0);
    for (const auto& m : p.moves) total += polyline_length(m.polyline);
    return total;
}

ValidationReport validate_decoupled(const FreeSpace& f, const DecoupledPlan& p, const std::optional<Config>& goal) {
    ValidationReport rep;
    Config cur = p.start;
    for (Robot r : {Robot::A, Robot::B}) {
        const Point& q = position_of(cur, r);
        if (!contains_point(f, q)) {
            rep.add({ViolationKind::OutsideFree, "start", std::nullopt,
                     std::string("robot ") + robot_name(r) + " at " + to_string(q)});
        }
    }
    const Scalar start_sep = linf_dist(cur.a, cur.b);
    if (start_sep < Scalar(1)) {
        rep.add({ViolationKind::RobotCollision, "start", std::nullopt, separation_witness(cur.a, cur.b, start_sep)});
    }
    for (std::size_t i = 0; i < p.moves.size(); ++i) {
        const Move& m = p.moves[i];
        if (m.polyline.empty()) continue;
        Point& pos = position_of(cur, m.robot);
        const Point& parked = m.robot == Robot::A ? cur.b : cur.a;
        const std::string where = "move " + std::to_string(i);
        if (m.polyline.front() != pos) {
            rep.add({ViolationKind::Discontinuity, where, std::nullopt,
                     std::string("robot ") + robot_name(m.robot) + " is at " + to_string(pos) + " but the move starts at " +
                         to_string(m.polyline.front())});
        }
        for (std::size_t k = 0; k + 1 < m.polyline.size(); ++k) {
            const Point& u = m.polyline[k];
            const Point& v = m.polyline[k + 1];
            const std::string seg = where + " segment " + std::to_string(k);
            if (u.x != v.x && u.y != v.y) {
                rep.add({ViolationKind::NonRectilinear, seg, std::nullopt, to_string(u) + " -> " + to_string(v)});
            }
            if (!segment_in_free(f, u, v)) {
                rep.add({ViolationKind::OutsideFree, seg, std::nullopt, to_string(u) + " -> " + to_string(v)});
            }
            const LinfMinimum sep = min_linf_along(u - parked, v - parked);
            if (sep.value < Scalar(1)) {
                const Point at = u + Point{sep.at * (v.x - u.x), sep.at * (v.y - u.y)};
                const Point& wa = m.robot == Robot::A ? at : parked;
                const Point& wb = m.robot == Robot::A ? parked : at;
                rep.add({ViolationKind::RobotCollision, seg, std::nullopt, separation_witness(wa, wb, sep.value)});
            }
        }
        pos = m.polyline.back();
    }
    if (goal && !(cur == *goal)) {
        rep.add({ViolationKind::GoalMismatch, "end", std::nullopt,
                 "plan ends at A " + to_string(cur.a) + ", B " + to_string(cur.b)});
    }
    return rep;
}

TimedPlan to_timed(const DecoupledPlan& p) {
    try {
        final_config(p);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidPlan, e.what());
    }
    TimedPlan tp;
    Scalar t(0);
    Config cur = p.start;
    tp.traj_a.push_back({t, cur.a});
    tp.traj_b.push_back({t, cur.b});
    for (const auto& m : p.moves) {
        for (std::size_t k = 1; k < m.polyline.size(); ++k) {
            t += l1_dist(m.polyline[k - 1], m.polyline[k]);
            position_of(cur, m.robot) = m.polyline[k];
            tp.traj_a.push_back({t, cur.a});
            tp.traj_b.push_back({t, cur.b});
        }
    }
    tp.T = t;
    return tp;
}

Point position_at(const std::vector<TimedPoint>& traj, const Scalar& t) {
    auto it = std::upper_bound(traj.begin(), traj.end(), t, [](const Scalar& v, const TimedPoint& tp) { return v < tp.t; });
    if (it == traj.begin()) return traj.front().p;
    if (it == traj.end()) return traj.back().p;
    const TimedPoint& lo = *(it - 1);
    const TimedPoint& hi = *it;
    const Scalar l = (t - lo.t) / (hi.t - lo.t);
    return {lo.p.x + l * (hi.p.x - lo.p.x), lo.p.y + l * (hi.p.y - lo.p.y)};
}

ValidationReport validate_timed(const FreeSpace& f, const TimedPlan& tp, const std::optional<Config>& start,
                                const std::optional<Config>& goal) {
    ValidationReport rep;
    bool well_formed = true;
    auto check_shape = [&](const std::vector<TimedPoint>& traj, const char* name) {
        const std::string who = std::string("trajectory ") + name;
        if (traj.empty()) {
            rep.add({ViolationKind::Discontinuity, who, std::nullopt, "empty trajectory"});
            well_formed = false;
            return;
        }
        if (traj.front().t != Scalar(0)) {
            rep.add({ViolationKind::Discontinuity, who, traj.front().t, "does not start at time 0"});
            well_formed = false;
        }
        if (traj.back().t != tp.T) {
            rep.add({ViolationKind::Discontinuity, who, traj.back().t, "does not end at T = " + tp.T.str()});
            well_formed = false;
        }
        for (std::size_t k = 1; k < traj.size(); ++k) {
            const TimedPoint& a = traj[k - 1];
            const TimedPoint& b = traj[k];
            if (b.t < a.t) {
                rep.add({ViolationKind::Discontinuity, who, b.t, "time decreases"});
                well_formed = false;
                continue;
            }
            const Scalar dist = l1_dist(a.p, b.p);
            if (b.t == a.t) {
                if (dist.sign() != 0) {
                    rep.add({ViolationKind::Discontinuity, who, a.t, "jump " + to_string(a.p) + " -> " + to_string(b.p)});
                    well_formed = false;
                }
                continue;
            }
            if (dist > b.t - a.t) {
                rep.add({ViolationKind::Overspeed, who + " piece " + std::to_string(k - 1), a.t,
                         "speed " + (dist / (b.t - a.t)).str()});
            }
        }
    };
    check_shape(tp.traj_a, "A");
    check_shape(tp.traj_b, "B");
    if (!well_formed) return rep;

    std::vector<Scalar> times;
    for (const auto& p : tp.traj_a) times.push_back(p.t);
    for (const auto& p : tp.traj_b) times.push_back(p.t);
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    auto check_point = [&](const Point& a, const Point& b, const Scalar& t) {
        if (!contains_point(f, a)) rep.add({ViolationKind::OutsideFree, "A", t, to_string(a)});
        if (!contains_point(f, b)) rep.add({ViolationKind::OutsideFree, "B", t, to_string(b)});
        const Scalar d = linf_dist(a, b);
        if (d < Scalar(1)) rep.add({ViolationKind::RobotCollision, "t = " + t.str(), t, separation_witness(a, b, d)});
    };
    if (times.size() == 1) check_point(position_at(tp.traj_a, times[0]), position_at(tp.traj_b, times[0]), times[0]);
    for (std::size_t k = 0; k + 1 < times.size(); ++k) {
        const Scalar& t0 = times[k];
        const Scalar& t1 = times[k + 1];
        const Point a0 = position_at(tp.traj_a, t0);
        const Point a1 = position_at(tp.traj_a, t1);
        const Point b0 = position_at(tp.traj_b, t0);
        const Point b1 = position_at(tp.traj_b, t1);
        const std::string locus = "t in [" + t0.str() + ", " + t1.str() + "]";
        if (!segment_in_free(f, a0, a1)) {
            rep.add({ViolationKind::OutsideFree, locus + " robot A", t0, to_string(a0) + " -> " + to_string(a1)});
        }
        if (!segment_in_free(f, b0, b1)) {
            rep.add({ViolationKind::OutsideFree, locus + " robot B", t0, to_string(b0) + " -> " + to_string(b1)});
        }
        const LinfMinimum sep = min_linf_along(a0 - b0, a1 - b1);
        if (sep.value < Scalar(1)) {
            const Scalar tw = t0 + sep.at * (t1 - t0);
            rep.add({ViolationKind::RobotCollision, locus, tw,
                     separation_witness(position_at(tp.traj_a, tw), position_at(tp.traj_b, tw), sep.value)});
        }
    }
    const Config first{tp.traj_a.front().p, tp.traj_b.front().p};
    const Config last{tp.traj_a.back().p, tp.traj_b.back().p};
    if (start && !(first == *start)) {
        rep.add({ViolationKind::Discontinuity, "start", Scalar(0),
                 "plan starts at A " + to_string(first.a) + ", B " + to_string(first.b)});
    }
    if (goal && !(last == *goal)) {
        rep.add({ViolationKind::GoalMismatch, "end", tp.T,
                 "plan ends at A " + to_string(last.a) + ", B " + to_string(last.b)});
    }
    return rep;
}

namespace {

std::vector<TimedPoint> unit_speed(const std::vector<Point>& path, const Scalar& horizon) {
    std::vector<TimedPoint> out;
    Scalar t(0);
    out.push_back({t, path.front()});
    for (std::size_t k = 1; k < path.size(); ++k) {
        t += l1_dist(path[k - 1], path[k]);
        out.push_back({t, path[k]});
    }
    if (t < horizon) out.push_back({horizon, path.back()});
    return out;
}

}  // namespace

TimedPlan simultaneous_unit_speed(const std::vector<Point>& path_a, const std::vector<Point>& path_b) {
    if (path_a.empty() || path_b.empty()) throw Error(ErrorCode::InvalidPlan, "empty path");
    TimedPlan tp;
    tp.T = max(polyline_length(path_a), polyline_length(path_b));
    tp.traj_a = unit_speed(path_a, tp.T);
    tp.traj_b = unit_speed(path_b, tp.T);
    return tp;
}

}  // namespace biplan
