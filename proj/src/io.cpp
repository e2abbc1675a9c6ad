#include "biplan/io.hpp"

#include <fstream>
#include <sstream>

#include "biplan/error.hpp"

namespace biplan {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

Ring ring_from_json(const Json& j) {
    if (!j.is_array()) bad("a ring must be an array of points");
    Ring r;
    for (const auto& p : j) r.push_back(point_from_json(p));
    return r;
}

Json ring_to_json(const Ring& r) {
    Json out = Json::array();
    for (const auto& p : r) out.push_back(point_to_json(p));
    return out;
}

Json config_to_json(const Config& c) {
    Json out = Json::object();
    out["a"] = point_to_json(c.a);
    out["b"] = point_to_json(c.b);
    return out;
}

Config config_from_json(const Json& j) { return {point_from_json(member(j, "a")), point_from_json(member(j, "b"))}; }

Json segment_to_json(const AxisSegment& s) { return Json::array({point_to_json(s.a), point_to_json(s.b)}); }

AxisSegment segment_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("a segment must be a pair of points");
    return {point_from_json(j[0]), point_from_json(j[1])};
}

Json trajectory_to_json(const std::vector<TimedPoint>& traj) {
    Json out = Json::array();
    for (const auto& tp : traj) out.push_back(Json::array({scalar_to_json(tp.t), point_to_json(tp.p)}));
    return out;
}

std::vector<TimedPoint> trajectory_from_json(const Json& j) {
    if (!j.is_array()) bad("a trajectory must be an array");
    std::vector<TimedPoint> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) bad("a trajectory entry must be [t, [x, y]]");
        out.push_back({scalar_from_json(e[0]), point_from_json(e[1])});
    }
    return out;
}

Json rect_to_json(const Rect& r) {
    return Json::array({scalar_to_json(r.x_lo), scalar_to_json(r.x_hi), scalar_to_json(r.y_lo), scalar_to_json(r.y_hi)});
}

Json polyline_to_json(const std::vector<Point>& pts) { return ring_to_json(pts); }

}  // namespace

Json scalar_to_json(const Scalar& v) { return v.str(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<std::int64_t>());
    bad("expected a rational string such as \"3/2\", got " + j.dump());
}

Json point_to_json(const Point& p) { return Json::array({scalar_to_json(p.x), scalar_to_json(p.y)}); }

Point point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("a point must be [x, y], got " + j.dump());
    return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Json workspace_to_json(const WorkspaceFile& w) {
    Json out = Json::object();
    out["v"] = 1;
    out["outer"] = ring_to_json(w.polygon.outer);
    Json holes = Json::array();
    for (const auto& h : w.polygon.holes) holes.push_back(ring_to_json(h));
    out["holes"] = std::move(holes);
    out["start"] = config_to_json(w.start);
    out["goal"] = config_to_json(w.goal);
    if (w.t_max) out["T_max"] = scalar_to_json(*w.t_max);
    if (!w.gates.empty()) {
        Json gates = Json::array();
        for (const auto& g : w.gates) gates.push_back(segment_to_json(g));
        out["gates"] = std::move(gates);
    }
    if (!w.layouts.is_null()) out["layouts"] = w.layouts;
    if (w.witness) out["witness"] = timed_to_json(*w.witness);
    return out;
}

WorkspaceFile workspace_from_json(const Json& j) {
    if (!j.is_object()) bad("workspace document must be a JSON object");
    if (member(j, "v") != 1) bad("unsupported workspace version " + j.at("v").dump());
    WorkspaceFile w;
    w.polygon.outer = ring_from_json(member(j, "outer"));
    if (j.contains("holes")) {
        if (!j.at("holes").is_array()) bad("\"holes\" must be an array of rings");
        for (const auto& h : j.at("holes")) w.polygon.holes.push_back(ring_from_json(h));
    }
    w.start = config_from_json(member(j, "start"));
    w.goal = config_from_json(member(j, "goal"));
    if (j.contains("T_max")) w.t_max = scalar_from_json(j.at("T_max"));
    if (j.contains("gates")) {
        for (const auto& g : j.at("gates")) w.gates.push_back(segment_from_json(g));
    }
    if (j.contains("layouts")) w.layouts = j.at("layouts");
    if (j.contains("witness")) w.witness = timed_from_json(j.at("witness"));
    return w;
}

Json timed_to_json(const TimedPlan& tp) {
    Json out = Json::object();
    out["T"] = scalar_to_json(tp.T);
    out["traj_a"] = trajectory_to_json(tp.traj_a);
    out["traj_b"] = trajectory_to_json(tp.traj_b);
    return out;
}

TimedPlan timed_from_json(const Json& j) {
    return {trajectory_from_json(member(j, "traj_a")), trajectory_from_json(member(j, "traj_b")),
            scalar_from_json(member(j, "T"))};
}

Json plan_to_json(const PlanFile& p) {
    Json out = Json::object();
    if (p.cost) out["cost"] = scalar_to_json(*p.cost);
    Json moves = Json::array();
    for (const auto& m : p.moves) {
        Json mj = Json::object();
        mj["robot"] = robot_name(m.robot);
        mj["points"] = polyline_to_json(m.polyline);
        moves.push_back(std::move(mj));
    }
    out["moves"] = std::move(moves);
    if (p.timed) {
        const Json timed = timed_to_json(*p.timed);
        for (const auto& [k, v] : timed.items()) out[k] = v;
    }
    return out;
}

PlanFile plan_from_json(const Json& j) {
    if (!j.is_object()) bad("plan document must be a JSON object");
    PlanFile p;
    if (j.contains("cost")) p.cost = scalar_from_json(j.at("cost"));
    if (j.contains("moves")) {
        if (!j.at("moves").is_array()) bad("\"moves\" must be an array");
        for (const auto& mj : j.at("moves")) {
            const Json& r = member(mj, "robot");
            if (r != "A" && r != "B") bad("robot must be \"A\" or \"B\", got " + r.dump());
            const Json& pts = member(mj, "points");
            if (!pts.is_array()) bad("move points must be an array");
            Move m{r == "A" ? Robot::A : Robot::B, {}};
            for (const auto& pj : pts) m.polyline.push_back(point_from_json(pj));
            p.moves.push_back(std::move(m));
        }
    }
    if (j.contains("traj_a") || j.contains("traj_b") || j.contains("T")) p.timed = timed_from_json(j);
    return p;
}

Json report_to_json(const ValidationReport& r) {
    Json out = Json::object();
    out["ok"] = r.ok;
    Json vs = Json::array();
    for (const auto& v : r.violations) {
        Json vj = Json::object();
        vj["kind"] = violation_kind_name(v.kind);
        vj["locus"] = v.locus;
        if (v.time) vj["time"] = scalar_to_json(*v.time);
        vj["witness"] = v.witness;
        vs.push_back(std::move(vj));
    }
    out["violations"] = std::move(vs);
    return out;
}

Json layouts_to_json(const std::vector<GadgetLayout>& layouts, const ScaledInstance& y) {
    Json out = Json::array();
    for (std::size_t i = 0; i < layouts.size(); ++i) {
        const GadgetLayout& l = layouts[i];
        Json g = Json::object();
        g["index"] = i + 1;
        g["y"] = scalar_to_json(y.y.at(i));
        g["x0"] = scalar_to_json(l.x0);
        g["width"] = scalar_to_json(l.width);
        g["s_a"] = point_to_json(l.s_a);
        g["s_b"] = point_to_json(l.s_b);
        g["t_a"] = point_to_json(l.t_a);
        g["t_b"] = point_to_json(l.t_b);
        g["gate"] = segment_to_json(l.gate);
        g["stub_top"] = segment_to_json(l.stub_top);
        g["stub_bottom"] = segment_to_json(l.stub_bottom);
        g["island_top"] = rect_to_json(l.island_top);
        g["island_bottom"] = rect_to_json(l.island_bottom);
        g["pi_a"] = polyline_to_json(l.pi_a);
        g["pi_bar_a"] = polyline_to_json(l.pi_bar_a);
        g["pi_b"] = polyline_to_json(l.pi_b);
        g["pi_bar_b"] = polyline_to_json(l.pi_bar_b);
        out.push_back(std::move(g));
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot write " + path);
    out << text;
    if (!out) bad("failed writing " + path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

PlanFile plan_file_from(const DecoupledPlan& p, const Scalar& cost) { return {cost, p.moves, std::nullopt}; }

DecoupledPlan decoupled_from(const PlanFile& p, const Config& start) { return {start, p.moves}; }

}  // namespace biplan
