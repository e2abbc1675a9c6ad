#pragma once

#include <string>
#include <vector>

#include "biplan/freespace.hpp"
#include "biplan/plan_model.hpp"

namespace biplan {

struct SvgOptions {
    const DecoupledPlan* plan = nullptr;
    const TimedPlan* timed = nullptr;  // used when plan is null
    std::vector<AxisSegment> gates;
    /// Robot squares drawn at these configurations.
    std::vector<Config> sample_configs;
    double pixels_per_unit = 40.0;
    int precision = 3;
};

/// Obstacles dark, free space light, robot A red and robot B blue.
/// Coordinates are rounded for display only.
std::string render_svg(const Workspace& w, const FreeSpace& f, const SvgOptions& opts = {});

}  // namespace biplan
