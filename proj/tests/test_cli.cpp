#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "biplan/cli.hpp"
#include "biplan/io.hpp"
#include "helpers.hpp"

using namespace biplan;
using namespace biplan::test;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("biplan_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_workspace(const std::string& path, const RectilinearPolygon& poly, const Config& s, const Config& t) {
    write_text_file(path, dump(workspace_to_json({poly, s, t, std::nullopt, {}, nullptr, std::nullopt})));
}

const RectilinearPolygon& chambers() {
    static const RectilinearPolygon p{
        ring({{0, 0}, {3, 0}, {3, 1}, {5, 1}, {5, 0}, {8, 0}, {8, 3}, {5, 3}, {5, q(3, 2)}, {3, q(3, 2)}, {3, 3}, {0, 3}}),
        {}};
    return p;
}

}  // namespace

TEST_CASE("cli exit-code matrix") {
    TempDir dir;
    const std::string rect = dir.file("rect.json");
    write_workspace(rect, rect_polygon(0, 5, 0, 4), {pt(1, 1), pt(4, 1)}, {pt(4, 3), pt(1, 3)});
    const std::string two = dir.file("two.json");
    write_workspace(two, chambers(), {pt(1, 1), pt(1, 2)}, {pt(7, 1), pt(1, 2)});

    SUBCASE("plan prints the optimal plan") {
        const Run r = run({"plan", rect});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["cost"] == "10");
        CHECK(j["moves"].size() >= 2);
        CHECK(run({"plan", rect}).out == r.out);
    }
    SUBCASE("plan reports infeasible instances") {
        const Run r = run({"plan", two});
        CHECK(r.code == 2);
        CHECK(Json::parse(r.out) == Json::parse(R"({"status":"infeasible"})"));
    }
    SUBCASE("validate accepts planner output and rejects tampering") {
        const std::string plan = dir.file("plan.json");
        REQUIRE(run({"plan", rect, "--out", plan, "--svg", dir.file("p.svg"), "--dump-grid", dir.file("g.json")}).code ==
                0);
        CHECK(fs::exists(dir.file("p.svg")));
        CHECK(Json::parse(slurp(dir.file("g.json")))["points"].size() > 0);
        const Run ok = run({"validate", rect, plan});
        CHECK(ok.code == 0);
        CHECK(Json::parse(ok.out)["ok"] == true);
        CHECK(run({"validate", rect, plan, "--timed"}).code == 0);

        Json j = Json::parse(slurp(plan));
        j["cost"] = "9";
        write_text_file(plan, j.dump());
        const Run bad_cost = run({"validate", rect, plan});
        CHECK(bad_cost.code == 2);
        CHECK(Json::parse(bad_cost.out)["violations"][0]["kind"] == "CostMismatch");

        const Json crash = Json::parse(R"({"moves":[{"robot":"A","points":[["1","1"],["4","1"]]}]})");
        write_text_file(plan, crash.dump());
        const Run collide = run({"validate", rect, plan});
        CHECK(collide.code == 2);
        CHECK(collide.out.find("RobotCollision") != std::string::npos);
    }
    SUBCASE("malformed input exits 1 with a JSON error") {
        write_text_file(dir.file("junk.json"), "{ not json");
        const Run r = run({"plan", dir.file("junk.json")});
        CHECK(r.code == 1);
        CHECK(Json::parse(r.err)["error"] == "ParseError");
        CHECK(Json::parse(run({"plan", dir.file("missing.json")}).err)["error"] == "ParseError");
    }
    SUBCASE("invalid geometry and non-free starts exit 1") {
        const std::string bad = dir.file("bad.json");
        write_workspace(bad, {ring({{0, 0}, {3, 0}, {3, 3}, {1, 3}, {1, -1}, {0, -1}}), {}}, {pt(1, 1), pt(2, 2)},
                        {pt(1, 1), pt(2, 2)});
        CHECK(Json::parse(run({"plan", bad}).err)["error"] == "InvalidWorkspace");
        const std::string blocked = dir.file("blocked.json");
        write_workspace(blocked, rect_polygon(0, 5, 0, 4), {pt(1, 1), pt(q(3, 2), 1)}, {pt(4, 3), pt(1, 3)});
        const Run r = run({"plan", blocked});
        CHECK(r.code == 1);
        CHECK(Json::parse(r.err)["error"] == "StartOrGoalNotFree");
    }
    SUBCASE("usage errors") {
        CHECK(run({}).code == 1);
        CHECK(run({"bogus"}).code == 1);
        CHECK(run({"plan"}).code == 1);
        CHECK(Json::parse(run({"oracle-check", "--seeds", "x..y"}).err)["error"] == "ParseError");
        CHECK(run({"--help"}).code == 0);
    }
    SUBCASE("gen-gadget writes the instance and witness") {
        const std::string g = dir.file("g.json");
        const Run r = run({"gen-gadget", "--values", "1,1", "--partition", "1", "--out", g});
        CHECK(r.code == 0);
        const WorkspaceFile wf = workspace_from_json(read_json_file(g));
        CHECK(wf.t_max == q(43, 2));
        CHECK(wf.gates.size() == 2);
        REQUIRE(wf.witness.has_value());
        CHECK(wf.witness->T == q(43, 2));
        CHECK(wf.layouts.size() == 2);
        CHECK(run({"gen-gadget", "--values", "1,x", "--out", g}).code == 1);
        CHECK(Json::parse(run({"gen-gadget", "--values", "1,1", "--partition", "3", "--out", g}).err)["error"] ==
              "InvalidPartition");
        const Run render = run({"render", g, "--svg", dir.file("g.svg")});
        CHECK(render.code == 0);
        CHECK(slurp(dir.file("g.svg")).find("robot-path") != std::string::npos);
    }
    SUBCASE("gen-random is deterministic") {
        REQUIRE(run({"gen-random", "--seed", "7", "--out", dir.file("a.json")}).code == 0);
        REQUIRE(run({"gen-random", "--seed", "7", "--out", dir.file("b.json")}).code == 0);
        CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
        REQUIRE(run({"gen-random", "--seed", "7", "--max-vertices", "20", "--holes", "2", "--out", dir.file("c.json")})
                    .code == 0);
        CHECK(workspace_from_json(read_json_file(dir.file("c.json"))).polygon.holes.size() == 2);
    }
    SUBCASE("render with and without a plan") {
        REQUIRE(run({"render", rect, "--svg", dir.file("r.svg")}).code == 0);
        CHECK(slurp(dir.file("r.svg")).find("robot-path") == std::string::npos);
        const std::string plan = dir.file("plan2.json");
        REQUIRE(run({"plan", rect, "--out", plan}).code == 0);
        REQUIRE(run({"render", rect, plan, "--svg", dir.file("rp.svg")}).code == 0);
        const std::string svg = slurp(dir.file("rp.svg"));
        std::size_t n = 0;
        for (auto at = svg.find("<polyline"); at != std::string::npos; at = svg.find("<polyline", at + 1)) ++n;
        CHECK(n == 2);
    }
    SUBCASE("oracle-check summary") {
        const Run r = run({"oracle-check", "--seeds", "1..6", "--jobs", "2"});
        CHECK(r.code == 0);
        const Json j = Json::parse(r.out);
        CHECK(j["instances"] == 6);
        CHECK(j["agree"] == 6);
        CHECK(j["mismatches"].empty());
        const Run refined = run({"oracle-check", "--seeds", "1..3", "--mode", "refined", "--extra-levels", "1"});
        CHECK(refined.code == 0);
        CHECK(run({"oracle-check", "--seeds", "1..3", "--mode", "other"}).code == 1);
    }
}
