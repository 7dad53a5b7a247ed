#include <doctest.h>

#include "frontsim/config.hpp"

using namespace frontsim;

TEST_SUITE_BEGIN("config");

TEST_CASE("minimal cone config gets all defaults") {
    const ParsedConfig pc = parse_config("[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n");
    CHECK(pc.scenario.kind == ScenarioKind::Cone);
    CHECK(pc.scenario.w == 2.0);
    CHECK(pc.scenario.theta == 0.75);
    CHECK(pc.scenario.a == 0.3);
    CHECK(pc.scenario.s == 1.0);
    CHECK(pc.scenario.b_inside == 1e-5);
    CHECK(pc.scenario.front_x0 == doctest::Approx(-10.0));
    CHECK(pc.scenario.domain.dx == 0.1);
    CHECK(pc.scenario.domain.dy == 0.1);
    CHECK(pc.scenario.domain.nx == 600);
    CHECK(pc.scenario.domain.ny == 900);
    CHECK(pc.scenario.domain.x0 == doctest::Approx(-20.0));
    CHECK(pc.scenario.center_y() == doctest::Approx(0.0));
    CHECK(pc.solver.dt == 1e-3);
    CHECK(pc.solver.t_end == 200.0);
    CHECK(!pc.has_sweep());
}

TEST_CASE("comments, blank lines, domain overrides") {
    const char* text =
        "# a comment\n"
        "[scenario]\n"
        "kind = junction   # trailing comment\n"
        "w1 = 4\n"
        "w2 = 12\n"
        "\n"
        "[domain]\n"
        "lx = 30\n"
        "ly = 20\n"
        "x0 = -15\n"
        "[solver]\n"
        "t_end = 80\n"
        "early_exit = true\n";
    const ParsedConfig pc = parse_config(text);
    CHECK(pc.scenario.domain.nx == 300);
    CHECK(pc.scenario.domain.ny == 200);
    CHECK(pc.scenario.domain.x0 == -15.0);
    CHECK(pc.scenario.t_end == 80.0);
    CHECK(pc.solver.early_exit);
}

TEST_CASE("hole and checkerboard defaults derive from the domain") {
    const ParsedConfig h = parse_config("[scenario]\nkind = hole\nradius = 10\n");
    // center at mid-domain, front 10 units left of the rim
    CHECK(h.scenario.obstacle_start_x() == doctest::Approx(29.95));
    CHECK(h.scenario.front_x0 == doctest::Approx(19.95));

    const ParsedConfig c = parse_config("[scenario]\nkind = checkerboard\nw1 = 1\nwb = 5\n");
    CHECK(c.scenario.obstacle_start_x() == doctest::Approx(20.0));
    CHECK(c.scenario.front_x0 == doctest::Approx(10.0));
}

TEST_CASE("cfl precheck rejects dt = 0.01 at dx = 0.1") {
    const char* text = "[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n[solver]\ndt = 0.01\n";
    CHECK_THROWS_AS(parse_config(text), ConfigError);
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        CHECK(e.key == "dt");
        CHECK(std::string(e.what()).find("CFL") != std::string::npos);
    }
}

TEST_CASE("contracting junction is accepted") {
    const ParsedConfig pc = parse_config("[scenario]\nkind = junction\nw1 = 10\nw2 = 4\n");
    CHECK(pc.scenario.w1 == 10.0);
    CHECK(pc.scenario.w2 == 4.0);
}

TEST_CASE("errors carry the key and line") {
    auto expect_error = [](const char* text, const char* key, int line) {
        try {
            parse_config(text);
            FAIL_CHECK("expected ConfigError for: " << text);
        } catch (const ConfigError& e) {
            CHECK(e.key == key);
            CHECK(e.line == line);
        }
    };
    expect_error("[scenario]\nkind = cone\nw = 2\ntheta = 0.75\nbogus = 1\n", "scenario.bogus", 5);
    expect_error("[scenario]\nkind = cone\nw = abc\ntheta = 0.75\n", "scenario.w", 3);
    expect_error("[scenario]\nkind = dodecahedron\n", "kind", 2);
    expect_error("[sweep]\naxis2 = w 1 4 7\n[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n",
                 "axis2", 2);
    expect_error("[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n[sweep]\naxis1 = w 1 4\n",
                 "axis1", 6);
    expect_error("[scenario]\nkind = cone\nw = 2\ntheta = 0.75\nw = 3\n", "w", 5);
    expect_error("kind = cone\n", "kind", 1);
}

TEST_CASE("missing required keys") {
    CHECK_THROWS_AS(parse_config(""), ConfigError);
    CHECK_THROWS_AS(parse_config("[scenario]\nkind = cone\nw = 2\n"), ConfigError); // no theta
}

TEST_CASE("sweep axes parse and validate") {
    const char* text =
        "[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n"
        "[sweep]\naxis1 = w 1 4 7\naxis2 = theta 0.2 3.0 15\nworkers = 2\noutput = outdir\n";
    const ParsedConfig pc = parse_config(text);
    REQUIRE(pc.axes.size() == 2);
    CHECK(pc.axes[0].name == "w");
    CHECK(pc.axes[0].value(0) == 1.0);
    CHECK(pc.axes[0].value(6) == 4.0);
    CHECK(pc.axes[1].count == 15);
    CHECK(pc.workers == 2);
    CHECK(pc.output == "outdir");
    const SweepSpec spec = pc.sweep_spec();
    CHECK(spec.axes.size() == 2);
    CHECK(spec.output_dir == "outdir");

    // endpoint that violates scenario invariants is rejected at parse time
    const char* bad =
        "[scenario]\nkind = cone\nw = 2\ntheta = 0.75\n[sweep]\naxis1 = theta 0.5 5.0 4\n";
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
}

TEST_CASE("single-axis value spacing") {
    SweepAxis ax{"w", 1.0, 4.0, 7};
    CHECK(ax.value(0) == 1.0);
    CHECK(ax.value(3) == doctest::Approx(2.5));
    CHECK(ax.value(6) == 4.0);
    SweepAxis single{"w", 2.0, 9.0, 1};
    CHECK(single.value(0) == 2.0);
}

TEST_SUITE_END();
