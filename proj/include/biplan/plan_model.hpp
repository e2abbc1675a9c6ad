#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biplan/freespace.hpp"

namespace biplan {

enum class Robot { A, B };

const char* robot_name(Robot r);

/// One robot travels along the polyline while the other stays parked.
struct Move {
    Robot robot = Robot::A;
    std::vector<Point> polyline;

    friend bool operator==(const Move&, const Move&) = default;
};

struct DecoupledPlan {
    Config start;
    std::vector<Move> moves;

    friend bool operator==(const DecoupledPlan&, const DecoupledPlan&) = default;
};

struct TimedPoint {
    Scalar t;
    Point p;

    friend bool operator==(const TimedPoint&, const TimedPoint&) = default;
};

/// Piecewise-linear trajectories on [0, T]; breakpoint times are nondecreasing.
struct TimedPlan {
    std::vector<TimedPoint> traj_a;
    std::vector<TimedPoint> traj_b;
    Scalar T;

    friend bool operator==(const TimedPlan&, const TimedPlan&) = default;
};

enum class ViolationKind { OutsideFree, RobotCollision, Discontinuity, Overspeed, NonRectilinear, GoalMismatch,
                           CostMismatch };

const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string locus;           // "move 3 segment 1", "t in [2, 5/2]", ...
    std::optional<Scalar> time;  // witness time for timed checks
    std::string witness;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(Violation v) {
        ok = false;
        violations.push_back(std::move(v));
    }
    bool has(ViolationKind k) const;
};

/// Sum of the l1 lengths of all move polylines. Throws
/// Error(DiscontinuousPlan) if a move does not start where its robot stands.
Scalar plan_cost(const DecoupledPlan& p);

/// Position of both robots after all moves (throws like plan_cost).
Config final_config(const DecoupledPlan& p);

ValidationReport validate_decoupled(const FreeSpace& f, const DecoupledPlan& p,
                                    const std::optional<Config>& goal = std::nullopt);

/// Sequential execution at unit speed; T equals plan_cost(p).
TimedPlan to_timed(const DecoupledPlan& p);

ValidationReport validate_timed(const FreeSpace& f, const TimedPlan& tp,
                                const std::optional<Config>& start = std::nullopt,
                                const std::optional<Config>& goal = std::nullopt);

inline Scalar makespan(const TimedPlan& tp) { return tp.T; }

/// Position on a trajectory at time t (clamped to its ends).
Point position_at(const std::vector<TimedPoint>& traj, const Scalar& t);

/// Timed plan where each robot follows its polyline at unit speed from time 0
/// and then waits; T is the longer of the two lengths.
TimedPlan simultaneous_unit_speed(const std::vector<Point>& path_a, const std::vector<Point>& path_b);

}  // namespace biplan
