#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#ifndef PONCELET_CLI_PATH
#error "PONCELET_CLI_PATH must point at the poncelet-loci binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
    int code;
    std::string out;
};

int run_counter = 0;

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_capture_" + std::to_string(run_counter++) + ".txt";
    const std::string cmd =
        std::string(PONCELET_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(out_path.c_str());
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("orbit report carries the expected vertices") {
    const RunResult r = run_cli("orbit --a 2 --b 1 --t 0");
    CHECK(r.code == 0);
    CHECK(r.out.find("p2 = (-1.73703418364") != std::string::npos);
    CHECK(r.out.find("0.495659218833") != std::string::npos);
    CHECK(r.out.find("caustic") != std::string::npos);
}

TEST_CASE("circle orbit is fine on the CLI") {
    const RunResult r = run_cli("orbit --a 1 --b 1 --t 0.3");
    CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 1") {
    CHECK(run_cli("orbit --a 1 --b 2 --t 0").code == 1);   // a < b
    CHECK(run_cli("orbit --a 0 --b 0 --t 0").code == 1);   // nonpositive
    CHECK(run_cli("locus --a 2 --b 1 --n 4").code == 1);   // n < 8
    CHECK(run_cli("invert --x 1 --y 2").code == 1);        // off the region
    CHECK(run_cli("orbit --a 2 --b 1 --bogus 3").code == 1);
    CHECK(run_cli("").code == 1);                          // missing subcommand
    CHECK(run_cli("check").code == 1);                     // neither --grid nor table
}

TEST_CASE("numeric failures exit with 2") {
    // The bisector locus of a circle degenerates to a point.
    CHECK(run_cli("curvature --a 1 --b 1 --curve locus").code == 2);
    CHECK(run_cli("covering --a 1 --b 1").code == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("locus --help").code == 0);
}

TEST_CASE("locus CSV is byte-stable and carries the exact header") {
    const RunResult r1 = run_cli("locus --a 2 --b 1 --n 100 --csv cli_t1.csv");
    const RunResult r2 = run_cli("locus --a 2 --b 1 --n 100 --csv cli_t2.csv");
    CHECK(r1.code == 0);
    CHECK(r2.code == 0);
    const std::string f1 = slurp("cli_t1.csv");
    const std::string f2 = slurp("cli_t2.csv");
    CHECK(f1 == f2);
    CHECK(f1.rfind("t,x1,y1,xc,yc,residual_canonical\n", 0) == 0);
    CHECK(count_occurrences(f1, "\n") == 101);  // header + 100 rows
    std::remove("cli_t1.csv");
    std::remove("cli_t2.csv");

    // Without --csv the table goes to stdout, identically.
    const RunResult direct = run_cli("locus --a 2 --b 1 --n 100");
    CHECK(direct.out == f1);
}

TEST_CASE("orbit CSV has one row per vertex") {
    const RunResult r = run_cli("orbit --a 2 --b 1 --t 0.5 --csv cli_orbit.csv");
    CHECK(r.code == 0);
    const std::string f = slurp("cli_orbit.csv");
    CHECK(f.rfind("vertex,x,y\n", 0) == 0);
    CHECK(count_occurrences(f, "\n") == 4);
    std::remove("cli_orbit.csv");
}

TEST_CASE("locus --fit prints the fit JSON and the two-kind comparison") {
    const RunResult r = run_cli("locus --a 2 --b 1 --n 256 --fit");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"fit_residual\"") != std::string::npos);
    CHECK(r.out.find("center-kind fits: bisector (0.098612") != std::string::npos);
    CHECK(r.out.find("incenter (1.302775") != std::string::npos);
}

TEST_CASE("json reports parse and carry the documented fields") {
    const RunResult orbit = run_cli("orbit --a 2 --b 1 --t 0 --json");
    CHECK(orbit.code == 0);
    const json jo = json::parse(orbit.out);
    CHECK(jo["vertices"].size() == 3);
    CHECK(std::abs(jo["vertices"][1][0].get<double>() - (-1.73703418364266)) < 1e-9);
    CHECK(std::abs(jo["caustic"]["a1"].get<double>() - 1.73703418364266) < 1e-9);

    const RunResult locus = run_cli("locus --a 2 --b 1 --n 256 --fit --json");
    CHECK(locus.code == 0);
    const json jl = json::parse(locus.out);
    CHECK(std::abs(jl["fit"]["sx"].get<double>() - 0.0986121811340026) < 1e-6);
    CHECK(std::abs(jl["fit_incenter"]["sx"].get<double>() - 1.30277563773199) < 1e-5);
    CHECK(jl["max_residual_canonical"].get<double>() < 1e-8);
    CHECK(std::abs(jl["canonical"]["sy"].get<double>() - (-1.30277563773199)) < 1e-9);

    const RunResult caustic = run_cli("caustic --a 3 --b 1 --json");
    CHECK(caustic.code == 0);
    const json jc = json::parse(caustic.out);
    CHECK(std::abs(jc["a1"].get<double>() - 2.82900140449407) < 1e-9);
    CHECK(jc["confocality_residual"].get<double>() < 1e-11);

    const RunResult inv = run_cli("invert --x 1.7370342 --y 0.1314829 --json");
    CHECK(inv.code == 0);
    const json ji = json::parse(inv.out);
    CHECK(std::abs(ji["a"].get<double>() - 2.0) < 1e-5);
    CHECK(std::abs(ji["b"].get<double>() - 1.0) < 1e-5);
    CHECK(ji["discriminant_sign"].get<int>() == -1);

    const RunResult curv = run_cli("curvature --a 2 --b 1 --curve locus --json");
    CHECK(curv.code == 0);
    const json jk = json::parse(curv.out);
    CHECK(std::abs(jk["mean"].get<double>() - 3.92765383809285) < 1e-5);
    CHECK(jk["rel_std"].get<double>() < 1e-6);

    const RunResult cover = run_cli("covering --a 2 --b 1 --probes 5 --json");
    CHECK(cover.code == 0);
    const json jv = json::parse(cover.out);
    CHECK(jv["all_three"].get<bool>() == true);
    for (const auto& row : jv["probes"]) CHECK(row["degree"].get<int>() == 3);
}

TEST_CASE("check on a single table passes and reports JSON") {
    const RunResult r = run_cli("check --a 2 --b 1 --json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["all_passed"].get<bool>() == true);
    CHECK(j["failed"].get<int>() == 0);
    CHECK(j["results"].size() > 20);
    for (const auto& row : j["results"]) {
        CHECK(row.contains("name"));
        CHECK(row.contains("max_residual"));
        CHECK(row.contains("tolerance"));
        CHECK(row.contains("status"));
    }
}

TEST_CASE("svg output is well-formed and has one path per curve") {
    const RunResult r = run_cli("locus --a 2 --b 1 --n 64 --svg cli_locus.svg");
    CHECK(r.code == 0);
    const std::string svg = slurp("cli_locus.svg");
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<path") == 3);
    CHECK(svg.find("id=\"table\"") != std::string::npos);
    CHECK(svg.find("id=\"caustic\"") != std::string::npos);
    CHECK(svg.find("id=\"locus\"") != std::string::npos);
    // Polylines carry at least 512 points each: count the line-to commands.
    CHECK(count_occurrences(svg, "L") >= 3 * 511);
    std::remove("cli_locus.svg");

    const RunResult ro = run_cli("orbit --a 2 --b 1 --t 0.4 --svg cli_orbit.svg");
    CHECK(ro.code == 0);
    const std::string osvg = slurp("cli_orbit.svg");
    CHECK(count_occurrences(osvg, "<path") == 3);
    CHECK(osvg.find("id=\"orbit\"") != std::string::npos);
    std::remove("cli_orbit.svg");
}

TEST_CASE("config file supplies defaults and explicit flags win") {
    {
        std::ofstream cfg("cli_cfg.json");
        cfg << "{\"a\": 2.0, \"b\": 1.0, \"t\": 0.0}\n";
    }
    // All values from the file.
    const RunResult base = run_cli("orbit --config cli_cfg.json");
    CHECK(base.code == 0);
    CHECK(base.out.find("p1 = (2, 0)") != std::string::npos);
    // The command line overrides the file.
    const RunResult over = run_cli("orbit --config cli_cfg.json --t 1.0");
    CHECK(over.code == 0);
    CHECK(over.out.find("p1 = (1.08060461") != std::string::npos);
    std::remove("cli_cfg.json");

    const RunResult missing = run_cli("orbit --config cli_absent.json --a 2 --b 1");
    CHECK(missing.code == 1);
}
