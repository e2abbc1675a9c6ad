#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "biplan/freespace.hpp"
#include "biplan/plan_model.hpp"

namespace biplan {

struct PartitionInstance {
    std::vector<std::int64_t> values;
};

struct ScaledInstance {
    std::vector<Scalar> y;
};

/// Geometry of one gadget in the chain. Gadget i occupies x in [x0, x0 + width];
/// robot A enters on the lane y = 1 and robot B on y = -1.
struct GadgetLayout {
    Scalar x0;
    Scalar width;
    Point s_a, s_b, t_a, t_b;
    /// Vertical passage between the two islands that only one robot fits through at a time.
    AxisSegment gate;
    /// Parts of the island faces beside the gate between the gate and each lane.
    AxisSegment stub_top, stub_bottom;
    Rect island_top, island_bottom;
    RectSet obstacles;
    /// Through the gate (pi) and around the island (pi_bar), per robot.
    std::vector<Point> pi_a, pi_bar_a, pi_b, pi_bar_b;
};

struct HardnessInstance {
    Workspace workspace;
    Config s;
    Config t;
    std::vector<GadgetLayout> layouts;
    Scalar T_max;
};

/// y_i = x_i / sum(x). Throws Error(InvalidPartition) for empty or non-positive input.
ScaledInstance scale_instance(const PartitionInstance& x);

/// Builds the gadget chain. With verify set, the metric properties of every
/// gadget are checked and Error(GeometryConstraintViolated) is thrown on failure.
HardnessInstance build_hardness_workspace(const ScaledInstance& y, bool verify = true);

/// The same chain with gadget i's gate closed (its two islands merged).
Workspace gate_blocked_workspace(const ScaledInstance& y, std::size_t i);

/// Measured quantities of gadget i, computed by shortest-path searches.
struct GadgetMeasurement {
    Scalar shortest_a;   // s_a -> t_a in the chain
    Scalar shortest_b;
    Scalar avoiding_a;   // same with the gate closed
    Scalar avoiding_b;
    Scalar gate_length;
    Scalar stub_length;
    /// Length of F's cross-section along the gate; below 1 means two robots cannot both be on it.
    Scalar gate_clearance;
};

GadgetMeasurement measure_gadget(const HardnessInstance& inst, const ScaledInstance& y, std::size_t i);

/// Robot A takes pi_a in the gadgets of ya and pi_bar_a elsewhere; robot B
/// takes pi_b in yb and pi_bar_b elsewhere. Both move at unit speed from t = 0.
/// Indices are 0-based. Throws Error(InvalidPartition) unless ya, yb are a
/// disjoint cover of the gadget indices.
TimedPlan plan_from_partition(const std::vector<GadgetLayout>& layouts, const ScaledInstance& y,
                              const std::vector<std::size_t>& ya, const std::vector<std::size_t>& yb);

enum class TinyStatus { Feasible, NotFoundAtResolution };

struct TinySearchResult {
    TinyStatus status = TinyStatus::NotFoundAtResolution;
    std::optional<TimedPlan> witness;
    std::uint64_t states = 0;  // joint states reached
    std::int64_t steps = -1;   // time steps of the witness
};

/// Exhaustive search over synchronized lattice motions: at every time step
/// each robot stays or moves to an adjacent lattice point (lattice anchored at
/// the origin). Requires spacing <= time_step so speeds stay at most 1.
/// Throws Error(NotOnLattice) if s or t is off the lattice and
/// Error(BudgetExceeded) if the joint state space exceeds the budget.
TinySearchResult tiny_makespan_search(const Workspace& w, const Config& s, const Config& t, const Scalar& T_max,
                                      const Scalar& spacing, const Scalar& time_step,
                                      std::uint64_t budget = 20'000'000);

}  // namespace biplan
