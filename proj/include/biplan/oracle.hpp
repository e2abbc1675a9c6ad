#pragma once

#include <cstdint>
#include <optional>

#include "biplan/freespace.hpp"
#include "biplan/planner.hpp"

namespace biplan {

enum class OracleMode { RefinedLines, DenseCoupledGrid };

struct OracleConfig {
    OracleMode mode = OracleMode::DenseCoupledGrid;
    int refine_extra_levels = 0;
    Scalar dense_spacing = Scalar(1, 2);
};

/// Same pipeline as the planner, with i-lines up to level 2 + extra_levels and
/// midpoints between consecutive lines added in both directions.
std::optional<Scalar> refined_plan_cost(const FreeSpace& f, const Config& s, const Config& t, int extra_levels);

/// Default pair budget for the dense oracle; BIPLAN_NODE_BUDGET overrides it.
std::uint64_t dense_node_budget();

/// Breadth-first search over all pairs of lattice points in F (lattice spacing
/// h anchored at the origin) with unit steps of one robot at a time.
/// Throws Error(SpacingViolation) when h does not divide 1/2 or an input
/// coordinate is off the lattice, Error(CapacityExceeded) above the budget.
std::optional<Scalar> dense_coupled_cost(const FreeSpace& f, const Config& s, const Config& t, const Scalar& spacing,
                                         std::optional<std::uint64_t> budget = std::nullopt);

struct RandomWorkspaceParams {
    std::uint64_t seed = 1;
    Rect bbox{Scalar(0), Scalar(12), Scalar(0), Scalar(12)};
    int max_vertices = 16;
    int min_holes = 0;
    int max_holes = 2;
    /// Spend the whole vertex budget instead of a random part of it.
    bool fill_vertices = false;
    int max_attempts = 2000;
};

struct RandomInstance {
    Workspace workspace;
    Config s;
    Config t;
};

/// Deterministic in the seed. Throws Error(GenerationExhausted).
RandomInstance random_workspace(const RandomWorkspaceParams& params);

}  // namespace biplan
