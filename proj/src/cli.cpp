#include "biplan/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "biplan/error.hpp"
#include "biplan/hardness.hpp"
#include "biplan/io.hpp"
#include "biplan/oracle.hpp"
#include "biplan/planner.hpp"
#include "biplan/svg.hpp"

namespace biplan {

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw Error(ErrorCode::ParseError, "not an integer: \"" + item + "\"");
        out.push_back(v);
    }
    return out;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const auto v = std::stoull(text);
            return {v, v};
        }
        const auto a = std::stoull(text.substr(0, dots));
        const auto b = std::stoull(text.substr(dots + 2));
        if (b < a) throw Error(ErrorCode::ParseError, "empty seed range " + text);
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "seed range must look like 1..200, got \"" + text + "\"");
    }
}

Json cost_json(const std::optional<Scalar>& c) { return c ? scalar_to_json(*c) : Json("infeasible"); }

struct Loaded {
    WorkspaceFile file;
    Workspace workspace;
    FreeSpace free_space;
};

Loaded load_workspace(const std::string& path) {
    WorkspaceFile file = workspace_from_json(read_json_file(path));
    Workspace w(file.polygon);
    FreeSpace f = compute_free_space(w);
    return {std::move(file), std::move(w), std::move(f)};
}

Json grid_dump(const GridLines& lines, const GridGraph& g) {
    auto lines_json = [](const std::vector<GridLine>& v) {
        Json out = Json::array();
        for (const auto& l : v) {
            Json e = Json::object();
            e["coord"] = scalar_to_json(l.coord);
            e["level"] = l.level;
            out.push_back(std::move(e));
        }
        return out;
    };
    Json out = Json::object();
    out["horizontal"] = lines_json(lines.horizontal);
    out["vertical"] = lines_json(lines.vertical);
    Json pts = Json::array();
    for (const auto& p : g.points) pts.push_back(point_to_json(p));
    out["points"] = std::move(pts);
    Json edges = Json::array();
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        for (Direction d : {Right, Up}) {
            if (g.neighbors[i][d] >= 0) edges.push_back(Json::array({i, g.neighbors[i][d]}));
        }
    }
    out["edges"] = std::move(edges);
    return out;
}

int run_plan(const std::string& ws_path, const std::string& out_path, const std::string& svg_path,
             const std::string& grid_path, bool heuristic, std::ostream& out) {
    Loaded in = load_workspace(ws_path);
    PlannerOptions opts;
    opts.heuristic = heuristic;
    Planning p = plan_in_free_space(in.free_space, in.file.start, in.file.goal, opts);
    if (!grid_path.empty()) write_text_file(grid_path, dump(grid_dump(p.lines, p.grid)));
    if (p.result.status != SearchStatus::Optimal) {
        Json j = Json::object();
        j["status"] = "infeasible";
        out << dump(j);
        return 2;
    }
    const DecoupledPlan plan = extract_plan(p.grid, p.result);
    const Json pj = plan_to_json(plan_file_from(plan, p.result.cost));
    if (!svg_path.empty()) {
        SvgOptions so;
        so.plan = &plan;
        so.gates = in.file.gates;
        write_text_file(svg_path, render_svg(in.workspace, in.free_space, so));
    }
    if (out_path.empty()) {
        out << dump(pj);
    } else {
        write_text_file(out_path, dump(pj));
        Json j = Json::object();
        j["status"] = "optimal";
        j["cost"] = scalar_to_json(p.result.cost);
        out << dump(j);
    }
    return 0;
}

int run_validate(const std::string& ws_path, const std::string& plan_path, bool timed, std::ostream& out) {
    Loaded in = load_workspace(ws_path);
    const PlanFile pf = plan_from_json(read_json_file(plan_path));
    const DecoupledPlan plan = decoupled_from(pf, in.file.start);
    ValidationReport rep;
    Json j = Json::object();
    if (timed) {
        const TimedPlan tp = pf.timed ? *pf.timed : to_timed(plan);
        rep = validate_timed(in.free_space, tp, in.file.start, in.file.goal);
        j["mode"] = "timed";
        j["makespan"] = scalar_to_json(makespan(tp));
    } else {
        rep = validate_decoupled(in.free_space, plan, in.file.goal);
        j["mode"] = "decoupled";
        if (!rep.has(ViolationKind::Discontinuity)) {
            const Scalar cost = plan_cost(plan);
            j["cost"] = scalar_to_json(cost);
            if (pf.cost && *pf.cost != cost) {
                rep.add({ViolationKind::CostMismatch, "plan", std::nullopt,
                         "declared " + pf.cost->str() + ", measured " + cost.str()});
            }
        }
    }
    const Json report = report_to_json(rep);
    for (const auto& [k, v] : report.items()) j[k] = v;
    out << dump(j);
    return rep.ok ? 0 : 2;
}

struct OracleOutcome {
    std::uint64_t seed = 0;
    std::optional<Scalar> planner;
    std::optional<Scalar> oracle;
    std::string skipped;  // reason when the oracle could not run
    std::optional<RandomInstance> instance;
};

OracleOutcome oracle_one(std::uint64_t seed, bool dense, int extra_levels, int max_vertices) {
    OracleOutcome o;
    o.seed = seed;
    RandomWorkspaceParams prm;
    prm.seed = seed;
    prm.max_vertices = max_vertices;
    RandomInstance inst = random_workspace(prm);
    const FreeSpace f = compute_free_space(inst.workspace);
    const Planning p = plan_in_free_space(f, inst.s, inst.t);
    if (p.result.status == SearchStatus::Optimal) o.planner = p.result.cost;
    try {
        o.oracle = dense ? dense_coupled_cost(f, inst.s, inst.t, Scalar(1, 2))
                         : refined_plan_cost(f, inst.s, inst.t, extra_levels);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CapacityExceeded) throw;
        o.skipped = e.what();
    }
    o.instance = std::move(inst);
    return o;
}

int run_oracle_check(const std::string& seeds, const std::string& mode, int extra_levels, int max_vertices,
                     int jobs, const std::string& dump_dir, std::ostream& out) {
    if (mode != "dense" && mode != "refined") throw Error(ErrorCode::ParseError, "mode must be dense or refined");
    const auto [first, last] = parse_seed_range(seeds);
    const bool dense = mode == "dense";
    std::vector<OracleOutcome> results(last - first + 1);
    const unsigned workers = static_cast<unsigned>(std::max(1, jobs));
    std::vector<std::thread> pool;
    std::vector<std::string> failures(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t k = w; k < results.size(); k += workers) {
                    results[k] = oracle_one(first + k, dense, extra_levels, max_vertices);
                }
            } catch (const std::exception& e) {
                failures[w] = e.what();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& f : failures) {
        if (!f.empty()) throw Error(ErrorCode::GenerationExhausted, f);
    }

    Json mismatches = Json::array();
    Json skipped = Json::array();
    std::size_t agree = 0;
    std::size_t infeasible = 0;
    for (const auto& r : results) {
        if (!r.skipped.empty()) {
            Json s = Json::object();
            s["seed"] = r.seed;
            s["reason"] = r.skipped;
            skipped.push_back(std::move(s));
            continue;
        }
        if (r.planner == r.oracle) {
            ++agree;
            if (!r.planner) ++infeasible;
            continue;
        }
        WorkspaceFile wf{r.instance->workspace.polygon(), r.instance->s, r.instance->t, std::nullopt, {}, nullptr,
                         std::nullopt};
        const std::string path = dump_dir + "/counterexample_seed" + std::to_string(r.seed) + ".json";
        write_text_file(path, dump(workspace_to_json(wf)));
        Json m = Json::object();
        m["seed"] = r.seed;
        m["planner"] = cost_json(r.planner);
        m["oracle"] = cost_json(r.oracle);
        m["instance"] = path;
        mismatches.push_back(std::move(m));
    }
    Json j = Json::object();
    j["mode"] = mode;
    if (!dense) j["extra_levels"] = extra_levels;
    j["seeds"] = seeds;
    j["instances"] = results.size();
    j["agree"] = agree;
    j["infeasible"] = infeasible;
    j["mismatches"] = mismatches;
    j["skipped"] = skipped;
    out << dump(j);
    return mismatches.empty() ? 0 : 2;
}

int run_gen_gadget(const std::string& values, const std::string& out_path, const std::string& partition,
                   const std::string& svg_path, bool verify, std::ostream& out) {
    const PartitionInstance x{parse_int_list(values)};
    const ScaledInstance y = scale_instance(x);
    const HardnessInstance inst = build_hardness_workspace(y, verify);
    WorkspaceFile wf{inst.workspace.polygon(), inst.s, inst.t, inst.T_max, {}, layouts_to_json(inst.layouts, y),
                     std::nullopt};
    for (const auto& l : inst.layouts) wf.gates.push_back(l.gate);
    Json summary = Json::object();
    summary["m"] = inst.layouts.size();
    summary["vertices"] = inst.workspace.n();
    summary["T_max"] = scalar_to_json(inst.T_max);
    if (!partition.empty()) {
        std::vector<std::size_t> ya;
        std::vector<std::size_t> yb;
        for (auto v : parse_int_list(partition)) {
            if (v < 1) throw Error(ErrorCode::InvalidPartition, "partition indices start at 1");
            ya.push_back(static_cast<std::size_t>(v - 1));
        }
        for (std::size_t i = 0; i < inst.layouts.size(); ++i) {
            if (std::find(ya.begin(), ya.end(), i) == ya.end()) yb.push_back(i);
        }
        wf.witness = plan_from_partition(inst.layouts, y, ya, yb);
        summary["witness_makespan"] = scalar_to_json(wf.witness->T);
    }
    write_text_file(out_path, dump(workspace_to_json(wf)));
    if (!svg_path.empty()) {
        SvgOptions so;
        so.gates = wf.gates;
        so.timed = wf.witness ? &*wf.witness : nullptr;
        write_text_file(svg_path, render_svg(inst.workspace, compute_free_space(inst.workspace), so));
    }
    out << dump(summary);
    return 0;
}

int run_gen_random(std::uint64_t seed, const std::string& out_path, int max_vertices, int holes,
                   const std::string& bbox, bool exact, std::ostream& out) {
    RandomWorkspaceParams prm;
    prm.seed = seed;
    prm.max_vertices = max_vertices;
    prm.fill_vertices = exact;
    if (holes >= 0) prm.min_holes = prm.max_holes = holes;
    if (!bbox.empty()) {
        const Scalar side = Scalar::parse(bbox);
        prm.bbox = {Scalar(0), side, Scalar(0), side};
    }
    const RandomInstance inst = random_workspace(prm);
    const WorkspaceFile wf{inst.workspace.polygon(), inst.s, inst.t, std::nullopt, {}, nullptr, std::nullopt};
    write_text_file(out_path, dump(workspace_to_json(wf)));
    Json j = Json::object();
    j["seed"] = seed;
    j["vertices"] = inst.workspace.n();
    out << dump(j);
    return 0;
}

int run_render(const std::string& ws_path, const std::string& plan_path, const std::string& svg_path) {
    Loaded in = load_workspace(ws_path);
    SvgOptions so;
    so.gates = in.file.gates;
    std::optional<DecoupledPlan> plan;
    std::optional<TimedPlan> timed;
    if (!plan_path.empty()) {
        const PlanFile pf = plan_from_json(read_json_file(plan_path));
        if (!pf.moves.empty() || !pf.timed) {
            plan = decoupled_from(pf, in.file.start);
        } else {
            timed = *pf.timed;
        }
    } else if (in.file.witness) {
        timed = *in.file.witness;
    }
    so.plan = plan ? &*plan : nullptr;
    so.timed = timed ? &*timed : nullptr;
    write_text_file(svg_path, render_svg(in.workspace, in.free_space, so));
    return 0;
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
    Json j = Json::object();
    j["error"] = std::string(code);
    j["message"] = message;
    err << j.dump() << "\n";
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal two-robot motion planning among rectilinear obstacles"};
    app.name("biplan");
    app.require_subcommand(1);

    std::string ws_path, plan_path, out_path, svg_path, grid_path, seeds, mode = "dense", values, partition, bbox;
    std::string dump_dir = ".";
    bool heuristic = false, timed = false, no_verify = false, exact_vertices = false;
    int max_vertices = 16, jobs = 1, holes = -1, extra_levels = 0;
    std::uint64_t seed = 1;

    auto* plan = app.add_subcommand("plan", "Find a min-sum optimal plan");
    plan->add_option("workspace", ws_path, "Workspace JSON")->required();
    plan->add_option("--out", out_path, "Write the plan JSON here");
    plan->add_option("--svg", svg_path, "Write an SVG rendering here");
    plan->add_option("--dump-grid", grid_path, "Write grid lines and grid graph as JSON");
    plan->add_flag("--heuristic", heuristic, "A* with single-robot distances");

    auto* validate = app.add_subcommand("validate", "Check a plan against a workspace");
    validate->add_option("workspace", ws_path, "Workspace JSON")->required();
    validate->add_option("plan", plan_path, "Plan JSON")->required();
    validate->add_flag("--timed", timed, "Validate the time-parameterized form");

    auto* oracle = app.add_subcommand("oracle-check", "Compare the planner with an independent oracle");
    oracle->add_option("--seeds", seeds, "Seed range a..b")->required();
    oracle->add_option("--mode", mode, "dense or refined");
    oracle->add_option("--extra-levels", extra_levels, "Extra line levels for refined mode");
    oracle->add_option("--max-vertices", max_vertices, "Vertex cap for generated workspaces");
    oracle->add_option("--jobs", jobs, "Worker threads");
    oracle->add_option("--dump-dir", dump_dir, "Directory for counterexample instances");

    auto* gadget = app.add_subcommand("gen-gadget", "Emit the gadget chain for a Partition instance");
    gadget->add_option("--values", values, "Comma-separated positive integers")->required();
    gadget->add_option("--out", out_path, "Output workspace JSON")->required();
    gadget->add_option("--partition", partition, "1-based indices taken by robot A's gate paths");
    gadget->add_option("--svg", svg_path, "Write an SVG rendering here");
    gadget->add_flag("--no-verify", no_verify, "Skip the shortest-path checks");

    auto* random = app.add_subcommand("gen-random", "Emit a random workspace with free start and goal");
    random->add_option("--seed", seed, "Generator seed")->required();
    random->add_option("--out", out_path, "Output workspace JSON")->required();
    random->add_option("--max-vertices", max_vertices, "Vertex cap");
    random->add_option("--holes", holes, "Exact number of holes");
    random->add_option("--bbox", bbox, "Side length of the square bounding box");
    random->add_flag("--exact-vertices", exact_vertices, "Use exactly --max-vertices vertices");

    auto* render = app.add_subcommand("render", "Render a workspace and optional plan as SVG");
    render->add_option("workspace", ws_path, "Workspace JSON")->required();
    render->add_option("plan", plan_path, "Plan JSON");
    render->add_option("--svg", svg_path, "Output SVG")->required();

    std::vector<std::string> argv_store{"biplan"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        write_error(err, "UsageError", e.what());
        return 1;
    }

    try {
        if (*plan) return run_plan(ws_path, out_path, svg_path, grid_path, heuristic, out);
        if (*validate) return run_validate(ws_path, plan_path, timed, out);
        if (*oracle) return run_oracle_check(seeds, mode, extra_levels, max_vertices, jobs, dump_dir, out);
        if (*gadget) return run_gen_gadget(values, out_path, partition, svg_path, !no_verify, out);
        if (*random) return run_gen_random(seed, out_path, max_vertices, holes, bbox, exact_vertices, out);
        if (*render) return run_render(ws_path, plan_path, svg_path);
    } catch (const Error& e) {
        write_error(err, error_code_name(e.code()), e.what());
        return 1;
    } catch (const std::exception& e) {
        write_error(err, "InternalError", e.what());
        return 1;
    }
    return 1;
}

}  // namespace biplan
