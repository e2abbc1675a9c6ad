#include "biplan/svg.hpp"

#include <iomanip>
#include <sstream>

namespace biplan {

namespace {

class Canvas {
public:
    Canvas(const Rect& view, double scale, int precision) : view_(view), scale_(scale), precision_(precision) {}

    std::string x(const Scalar& v) const { return num((v - view_.x_lo).to_double() * scale_); }
    std::string y(const Scalar& v) const { return num((view_.y_hi - v).to_double() * scale_); }
    std::string len(const Scalar& v) const { return num(v.to_double() * scale_); }
    std::string pt(const Point& p) const { return x(p.x) + "," + y(p.y); }

    std::string num(double v) const {
        std::ostringstream os;
        os << std::fixed << std::setprecision(precision_) << (v == 0.0 ? 0.0 : v);
        return os.str();
    }

private:
    Rect view_;
    double scale_;
    int precision_;
};

Rect polygon_bounds(const RectilinearPolygon& poly) {
    Rect r{poly.outer[0].x, poly.outer[0].x, poly.outer[0].y, poly.outer[0].y};
    for (const auto& p : poly.outer) {
        r.x_lo = min(r.x_lo, p.x);
        r.x_hi = max(r.x_hi, p.x);
        r.y_lo = min(r.y_lo, p.y);
        r.y_hi = max(r.y_hi, p.y);
    }
    return r;
}

std::string ring_path(const Canvas& c, const Ring& ring) {
    std::string d = "M" + c.pt(ring[0]);
    for (std::size_t i = 1; i < ring.size(); ++i) d += " L" + c.pt(ring[i]);
    return d + " Z";
}

std::vector<Point> robot_track(const DecoupledPlan& plan, Robot r) {
    std::vector<Point> pts{r == Robot::A ? plan.start.a : plan.start.b};
    for (const auto& m : plan.moves) {
        if (m.robot != r) continue;
        for (const auto& p : m.polyline) {
            if (pts.back() != p) pts.push_back(p);
        }
    }
    return pts;
}

std::vector<Point> robot_track(const std::vector<TimedPoint>& traj) {
    std::vector<Point> pts;
    for (const auto& tp : traj) {
        if (pts.empty() || pts.back() != tp.p) pts.push_back(tp.p);
    }
    return pts;
}

}  // namespace

std::string render_svg(const Workspace& w, const FreeSpace& f, const SvgOptions& opts) {
    const Scalar margin(1);
    const Rect view = polygon_bounds(w.polygon()).grown(margin);
    const Canvas c(view, opts.pixels_per_unit, opts.precision);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.len(view.x_hi - view.x_lo) << "\" height=\""
       << c.len(view.y_hi - view.y_lo) << "\" viewBox=\"0 0 " << c.len(view.x_hi - view.x_lo) << " "
       << c.len(view.y_hi - view.y_lo) << "\">\n";
    os << "<rect class=\"obstacle\" x=\"0\" y=\"0\" width=\"" << c.len(view.x_hi - view.x_lo) << "\" height=\""
       << c.len(view.y_hi - view.y_lo) << "\" fill=\"#333333\"/>\n";

    std::string d = ring_path(c, w.polygon().outer);
    for (const auto& h : w.polygon().holes) d += " " + ring_path(c, h);
    os << "<path class=\"workspace\" d=\"" << d << "\" fill=\"#bdbdbd\" fill-rule=\"evenodd\"/>\n";

    os << "<g class=\"free-space\">\n";
    for (const Rect& r : f.region().rects()) {
        if (r.degenerate()) {
            os << "<line class=\"free\" x1=\"" << c.x(r.x_lo) << "\" y1=\"" << c.y(r.y_lo) << "\" x2=\"" << c.x(r.x_hi)
               << "\" y2=\"" << c.y(r.y_hi) << "\" stroke=\"#f5f5dc\" stroke-width=\"2\"/>\n";
        } else {
            os << "<rect class=\"free\" x=\"" << c.x(r.x_lo) << "\" y=\"" << c.y(r.y_hi) << "\" width=\""
               << c.len(r.x_hi - r.x_lo) << "\" height=\"" << c.len(r.y_hi - r.y_lo) << "\" fill=\"#f5f5dc\"/>\n";
        }
    }
    os << "</g>\n";

    for (const auto& g : opts.gates) {
        os << "<line class=\"gate\" x1=\"" << c.x(g.a.x) << "\" y1=\"" << c.y(g.a.y) << "\" x2=\"" << c.x(g.b.x)
           << "\" y2=\"" << c.y(g.b.y) << "\" stroke=\"#2e7d32\" stroke-width=\"3\" stroke-dasharray=\"4 2\"/>\n";
    }

    for (const auto& cfg : opts.sample_configs) {
        for (Robot r : {Robot::A, Robot::B}) {
            const Point& p = r == Robot::A ? cfg.a : cfg.b;
            const Scalar h(1, 2);
            os << "<rect class=\"robot robot-" << (r == Robot::A ? "a" : "b") << "\" x=\"" << c.x(p.x - h) << "\" y=\""
               << c.y(p.y + h) << "\" width=\"" << c.len(Scalar(1)) << "\" height=\"" << c.len(Scalar(1))
               << "\" fill=\"" << (r == Robot::A ? "#d32f2f" : "#1565c0") << "\" fill-opacity=\"0.25\"/>\n";
        }
    }

    std::vector<Point> tracks[2];
    if (opts.plan) {
        tracks[0] = robot_track(*opts.plan, Robot::A);
        tracks[1] = robot_track(*opts.plan, Robot::B);
    } else if (opts.timed) {
        tracks[0] = robot_track(opts.timed->traj_a);
        tracks[1] = robot_track(opts.timed->traj_b);
    }
    const char* colors[] = {"#d32f2f", "#1565c0"};
    const char* names[] = {"a", "b"};
    if (opts.plan || opts.timed) {
        for (int r = 0; r < 2; ++r) {
            os << "<polyline class=\"robot-path robot-" << names[r] << "\" points=\"";
            for (std::size_t i = 0; i < tracks[r].size(); ++i) os << (i ? " " : "") << c.pt(tracks[r][i]);
            os << "\" fill=\"none\" stroke=\"" << colors[r] << "\" stroke-width=\"2\"/>\n";
            os << "<circle class=\"start robot-" << names[r] << "\" cx=\"" << c.x(tracks[r].front().x) << "\" cy=\""
               << c.y(tracks[r].front().y) << "\" r=\"4\" fill=\"" << colors[r] << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace biplan
