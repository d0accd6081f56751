#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "statgeo/config.hpp"
#include "statgeo/csvio.hpp"
#include "statgeo/errors.hpp"
#include "statgeo/run.hpp"
#include "statgeo/svgplot.hpp"

using namespace statgeo;
using namespace statgeo::scenario;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    fs::path dir = fs::temp_directory_path() /
                   ("statgeo_test_" + tag + "_" +
                    std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool any_issue_contains(const ConfigError& e, const std::string& needle) {
    for (const auto& issue : e.issues())
        if (issue.message.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("a complete geodesic config parses into typed parameters") {
    std::string text = R"(# trajectory on the shared-spread chart
[scenario]
kind = geodesic
seed = 7
plots = false

[family]
name = gaussian3d
r = 0.25

[geodesic]
theta0 = [0, 0, 1]
u0 = [0.3, -0.2, 0.4]
s_end = 4
method = rk4
step = 0.001
sample_every = 100
)";
    ScenarioConfig cfg = parse_config(text);
    CHECK(cfg.kind == ScenarioKind::geodesic);
    CHECK(cfg.seed == 7);
    CHECK_FALSE(cfg.plots);
    CHECK(to_string(cfg.kind) == "geodesic");

    const auto& p = std::get<GeodesicScenario>(cfg.params);
    CHECK(p.family.name == "gaussian3d");
    CHECK(p.family.r == doctest::Approx(0.25));
    REQUIRE(p.theta0.size() == 3);
    CHECK(p.u0[2] == doctest::Approx(0.4));
    CHECK(p.s_end == doctest::Approx(4.0));
    CHECK(p.stepper.kind == geodesic::Stepper::Kind::rk4);
    CHECK(p.stepper.step == doctest::Approx(0.001));
    CHECK(p.stepper.sample_every == 100);

    auto family = make_family(p.family);
    CHECK(family->dim() == 3);
    CHECK(family->id() == "gaussian3d");
}

TEST_CASE("defaults fill every key the config leaves out") {
    ScenarioConfig cfg = parse_config("[scenario]\nkind = money-sim\n");
    CHECK(cfg.kind == ScenarioKind::money_sim);
    CHECK(cfg.seed == 0);
    CHECK(cfg.plots);
    CHECK(cfg.output_dir == ".");

    const auto& p = std::get<MoneySimScenario>(cfg.params);
    CHECK(p.agents == 1000);
    CHECK(p.m_units == doctest::Approx(5000.0));
    CHECK(p.steps == 1000000);
    CHECK(p.init == "equal");
    CHECK(p.rule == "random_split");
    CHECK(p.burn_in == 200000);
    CHECK(p.bins == 60);
}

TEST_CASE("syntax problems report line and column") {
    try {
        (void)parse_config("[scenario\nkind = geodesic\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        REQUIRE(!e.issues().empty());
        CHECK(e.issues()[0].line == 1);
        CHECK(e.issues()[0].syntax);
        CHECK(any_issue_contains(e, "missing ']'"));
    }

    try {
        (void)parse_config("[scenario]\nkind geodesic\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.issues()[0].line == 2);
        CHECK(any_issue_contains(e, "expected 'key = value'"));
    }

    try {
        (void)parse_config("[scenario]\nkind = geodesic\nkind = growth\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "duplicate"));
        CHECK(e.issues()[0].line == 3);
    }
}

TEST_CASE("every validation problem is reported in one pass") {
    std::string text = R"([scenario]
kind = lotka-volterra

[lotka-volterra]
alpha1 = -1
alpha2 = nope
k0 = 0
t_end = [1, 2]
)";
    try {
        (void)parse_config(text);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.issues().size() >= 4);
        CHECK(any_issue_contains(e, "alpha1"));
        CHECK(any_issue_contains(e, "is not a number"));
        CHECK(any_issue_contains(e, "k0"));
        CHECK(any_issue_contains(e, "expected a number, got an array"));
        bool located = false;
        for (const auto& issue : e.issues())
            if (issue.line >= 5 && issue.col >= 1) located = true;
        CHECK(located);
    }
}

TEST_CASE("unknown kinds, keys, and families are flagged") {
    CHECK_THROWS_AS((void)parse_config("[scenario]\nkind = warp\n"),
                    ConfigError);

    try {
        (void)parse_config("[scenario]\nkind = growth\n\n[growth]\nmu = 0.2\nmv = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "unknown key 'mv'"));
    }

    std::string bad_family = R"([scenario]
kind = curvature-scan

[family]
name = hyperbolic

[curvature-scan]
start = [0, 0, 1]
stop = [0, 0, 2]
)";
    try {
        (void)parse_config(bad_family);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "hyperbolic"));
    }
}

TEST_CASE("domain validation runs against the declared family") {
    std::string inadmissible = R"([scenario]
kind = geodesic

[family]
name = gaussian3d

[geodesic]
theta0 = [0, 0, -1]
u0 = [0.1, 0.1, 0.1]
)";
    try {
        (void)parse_config(inadmissible);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "theta0"));
    }

    std::string wrong_size = R"([scenario]
kind = geodesic

[family]
name = gaussian3d

[geodesic]
theta0 = [0, 0, 1]
u0 = [0.1, 0.1]
)";
    try {
        (void)parse_config(wrong_size);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "u0"));
        CHECK(any_issue_contains(e, "3"));
    }

    try {
        (void)parse_config(
            "[scenario]\nkind = money-sim\n\n[money-sim]\nsteps = 100\nburn_in = 100\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "burn_in"));
    }

    try {
        (void)parse_config(
            "[scenario]\nkind = maxent\n\n[maxent]\nsupport = real_line\npowers = [1.5]\ntargets = [1]\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(any_issue_contains(e, "powers"));
    }
}

TEST_CASE("missing config files surface as io errors") {
    CHECK_THROWS_AS((void)load_config("/does/not/exist.ini"), IoError);
}

TEST_CASE("scenario runs write their declared files deterministically") {
    fs::path dir_a = fresh_dir("money_a");
    fs::path dir_b = fresh_dir("money_b");

    std::string text = R"([scenario]
kind = money-sim
seed = 9

[money-sim]
agents = 100
total_money = 500
steps = 50000
sample_every = 5000
burn_in = 10000
)";
    ScenarioConfig cfg = parse_config(text);
    cfg.output_dir = dir_a.string();
    RunReport report = run_scenario(cfg);

    REQUIRE(!report.files.empty());
    for (const auto& f : report.files) CHECK(fs::exists(f));
    bool conserved = false;
    for (const auto& [name, ok] : report.checks)
        if (name == "money_conserved") conserved = ok;
    CHECK(conserved);

    cfg.output_dir = dir_b.string();
    (void)run_scenario(cfg);
    CHECK(slurp(dir_a / "histogram.csv") == slurp(dir_b / "histogram.csv"));

    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
}

TEST_CASE("plots can be switched off") {
    fs::path dir = fresh_dir("geo");
    std::string text = R"([scenario]
kind = geodesic
plots = false

[family]
name = gaussian3d

[geodesic]
theta0 = [0, 0, 1]
u0 = [0.3, -0.2, 0.4]
s_end = 2
method = rk4
step = 0.001
sample_every = 100
)";
    ScenarioConfig cfg = parse_config(text);
    cfg.output_dir = dir.string();
    RunReport report = run_scenario(cfg);

    for (const auto& f : report.files)
        CHECK(fs::path(f).extension() != ".svg");
    CHECK(fs::exists(dir / "geodesic.csv"));
    CHECK_FALSE(fs::exists(dir / "geodesic.svg"));

    bool preserved = false;
    for (const auto& [name, ok] : report.checks)
        if (name == "affine_parameter_preserved") preserved = ok;
    CHECK(preserved);

    fs::remove_all(dir);
}

TEST_CASE("unwritable output directories surface as io errors") {
    ScenarioConfig cfg = parse_config("[scenario]\nkind = growth\n");
    cfg.output_dir = "/proc/statgeo_cannot_write_here";
    CHECK_THROWS_AS((void)run_scenario(cfg), IoError);
}

TEST_CASE("csv values round trip at full precision") {
    fs::path dir = fresh_dir("csv");
    fs::path file = dir / "values.csv";

    std::vector<double> values = {0.1 + 0.2, M_PI, 1e-300, -4.625,
                                  12345678901234567.0};
    std::vector<std::vector<double>> rows;
    for (double v : values) rows.push_back({v});
    write_csv(file.string(), {"v"}, rows);

    std::ifstream in(file);
    std::string line;
    std::getline(in, line);
    CHECK(line == "v");
    for (double expected : values) {
        REQUIRE(std::getline(in, line));
        CHECK(std::strtod(line.c_str(), nullptr) == expected);
    }

    CHECK(format_double(0.5) == "0.5");
    CHECK_THROWS_AS(write_csv("/no/such/dir/x.csv", {"v"}, rows), IoError);
    fs::remove_all(dir);
}

TEST_CASE("svg plots render series and reject bad paths") {
    fs::path dir = fresh_dir("svg");
    fs::path file = dir / "plot.svg";

    PlotSeries series;
    series.x = {0.0, 1.0, 2.0, 3.0};
    series.y = {1.0, 0.5, 0.25, 0.125};
    series.label = "decay";
    PlotOptions opts;
    opts.title = "decay curve";
    opts.log_y = true;
    write_svg_plot(file.string(), {series}, opts);

    std::string body = slurp(file);
    CHECK(body.find("<svg") != std::string::npos);
    CHECK(body.find("polyline") != std::string::npos);
    CHECK(body.find("decay curve") != std::string::npos);

    PlotSeries with_zeros = series;
    with_zeros.y = {0.0, -1.0, 0.25, 0.125};
    write_svg_plot(file.string(), {with_zeros}, opts);
    CHECK(slurp(file).find("<svg") != std::string::npos);

    CHECK_THROWS_AS(write_svg_plot("/no/such/dir/x.svg", {series}, opts),
                    IoError);
    fs::remove_all(dir);
}
