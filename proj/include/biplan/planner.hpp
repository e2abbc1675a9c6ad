#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "biplan/grid.hpp"
#include "biplan/plan_model.hpp"

namespace biplan {

/// A vertex of the configuration graph: one grid point per robot.
struct ConfigNode {
    int ia = -1;
    int ib = -1;

    friend bool operator==(const ConfigNode&, const ConfigNode&) = default;
    friend auto operator<=>(const ConfigNode&, const ConfigNode&) = default;
};

enum class SearchStatus { Optimal, Infeasible };

struct SearchResult {
    SearchStatus status = SearchStatus::Infeasible;
    Scalar cost;                        // valid when Optimal
    std::vector<ConfigNode> node_path;  // s .. t when Optimal
    std::size_t settled = 0;
    bool integer_weights = false;       // which Dijkstra variant ran
};

struct PlannerOptions {
    /// A* with the sum of single-robot grid distances as a consistent heuristic.
    bool heuristic = false;
    /// Skip the scaled-integer fast path and search with exact rationals.
    bool exact_weights = false;
    /// Largest |V|^2 for which flat arrays replace the hash-indexed store.
    std::uint64_t dense_limit = std::uint64_t{1} << 27;
};

/// Configurations reachable by moving one robot along one grid edge, with the
/// l1 length of that edge as weight. Pairs closer than 1 in l-infinity are dropped.
std::vector<std::pair<ConfigNode, Scalar>> config_neighbors(const GridGraph& g, const ConfigNode& u);

/// Dijkstra from s to t over the implicit configuration graph.
/// Throws Error(StartOrGoalNotFree) or Error(StartOrGoalNotOnGrid).
SearchResult shortest_plan(const FreeSpace& f, const GridGraph& g, const Config& s, const Config& t,
                           const PlannerOptions& opts = {});

/// Groups runs of steps by the same robot into moves with collinear points merged.
DecoupledPlan extract_plan(const GridGraph& g, const SearchResult& r);

/// Shortest l1 path of a lone robot inside F. Throws Error(PointNotFree).
std::optional<Scalar> single_robot_shortest(const FreeSpace& f, const Point& p, const Point& q);

/// Single-source grid distances from src (nullopt where unreachable).
std::vector<std::optional<Scalar>> grid_distances(const GridGraph& g, int src);

/// Free space, canonical grid and search for one instance.
struct Planning {
    FreeSpace free_space;
    GridLines lines;
    GridGraph grid;
    SearchResult result;
};

Planning plan_instance(const Workspace& w, const Config& s, const Config& t, const PlannerOptions& opts = {});
Planning plan_in_free_space(FreeSpace f, const Config& s, const Config& t, const PlannerOptions& opts = {});

}  // namespace biplan
