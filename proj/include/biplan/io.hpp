#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "biplan/freespace.hpp"
#include "biplan/hardness.hpp"
#include "biplan/plan_model.hpp"

namespace biplan {

using Json = nlohmann::ordered_json;

/// Workspace document. Optional members are emitted only when present.
struct WorkspaceFile {
    RectilinearPolygon polygon;
    Config start;
    Config goal;
    std::optional<Scalar> t_max;
    std::vector<AxisSegment> gates;
    Json layouts;  // gadget descriptions, kept verbatim; null when absent
    std::optional<TimedPlan> witness;

    friend bool operator==(const WorkspaceFile&, const WorkspaceFile&) = default;
};

/// Plan document: decoupled moves and/or a timed form.
struct PlanFile {
    std::optional<Scalar> cost;
    std::vector<Move> moves;
    std::optional<TimedPlan> timed;

    friend bool operator==(const PlanFile&, const PlanFile&) = default;
};

// Scalars are strings "p" or "p/q"; plain JSON integers are accepted on input.
Json scalar_to_json(const Scalar& v);
Scalar scalar_from_json(const Json& j);
Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

Json workspace_to_json(const WorkspaceFile& w);
/// Throws Error(ParseError) on schema violations.
WorkspaceFile workspace_from_json(const Json& j);

Json plan_to_json(const PlanFile& p);
PlanFile plan_from_json(const Json& j);

Json timed_to_json(const TimedPlan& tp);
TimedPlan timed_from_json(const Json& j);

Json report_to_json(const ValidationReport& r);
Json layouts_to_json(const std::vector<GadgetLayout>& layouts, const ScaledInstance& y);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

PlanFile plan_file_from(const DecoupledPlan& p, const Scalar& cost);
DecoupledPlan decoupled_from(const PlanFile& p, const Config& start);

}  // namespace biplan
