#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "frontsim/kink.hpp"
#include "frontsim/sweep.hpp"

using namespace frontsim;

namespace {

// fast 1-row template so sweep plumbing tests run in milliseconds
SweepSpec tiny_sweep() {
    SweepSpec spec;
    spec.scenario = Scenario::uniform_guide(1.0);
    spec.scenario.domain = GridSpec(200, 1, 0.1, 0.1, 0.0, 0.0);
    spec.scenario.front_x0 = 5.0;
    spec.solver.t_end = 2.0;
    spec.solver.diag_every = 0.5;
    spec.axes = {{"w", 1.0, 2.0, 2}, {"a", 0.25, 0.3, 2}};
    spec.workers = 1;
    return spec;
}

SweepResult synthetic_table(double slope, int nw, int nt) {
    SweepResult table;
    for (int iw = 0; iw < nw; ++iw)
        for (int it = 0; it < nt; ++it) {
            SweepRow row;
            const double w = 1.0 + iw * 3.0 / (nw - 1);
            const double theta = 0.25 + it * (2.0 - 0.25) / (nt - 1);
            row.params = {{"w", w}, {"theta", theta}};
            row.outcome = theta > slope * w ? Outcome::Blocked : Outcome::Crossed;
            table.rows.push_back(row);
        }
    return table;
}

} // namespace

TEST_SUITE_BEGIN("sweep");

TEST_CASE("parameter setter") {
    Scenario s = Scenario::cone(2.0, 0.75);
    set_scenario_param(s, "theta", 1.2);
    CHECK(s.theta == 1.2);
    set_scenario_param(s, "a", 0.4);
    CHECK(s.a == 0.4);
    CHECK_THROWS_AS(set_scenario_param(s, "nx", 3.0), std::invalid_argument);
    CHECK(is_sweepable_param("w1"));
    CHECK(!is_sweepable_param("dt"));
}

TEST_CASE("grid points are enumerated, sorted, and complete") {
    const SweepResult result = run_sweep(tiny_sweep());
    REQUIRE(result.rows.size() == 4);
    CHECK(!result.any_failed);
    // lexicographic order by (w, a)
    CHECK(result.rows[0].params[0].second == 1.0);
    CHECK(result.rows[0].params[1].second == 0.25);
    CHECK(result.rows[1].params[0].second == 1.0);
    CHECK(result.rows[1].params[1].second == 0.30);
    CHECK(result.rows[3].params[0].second == 2.0);
    for (const SweepRow& row : result.rows) {
        CHECK(!row.failed());
        CHECK(std::isfinite(row.final_front_x));
    }
}

TEST_CASE("results do not depend on the worker count") {
    SweepSpec spec = tiny_sweep();
    const SweepResult base = run_sweep(spec);
    spec.workers = 4;
    const SweepResult threaded = run_sweep(spec);
    REQUIRE(base.rows.size() == threaded.rows.size());
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        CHECK(base.rows[i].params == threaded.rows[i].params);
        CHECK(base.rows[i].outcome == threaded.rows[i].outcome);
        CHECK(base.rows[i].final_reaction_integral == threaded.rows[i].final_reaction_integral);
        CHECK(base.rows[i].final_front_x == threaded.rows[i].final_front_x);
    }
}

TEST_CASE("failed points become error rows and the sweep continues") {
    SweepSpec spec = tiny_sweep();
    spec.axes = {{"w", 0.2, 1.0, 2}}; // w = 0.2 is under-resolved at dx = 0.1
    const SweepResult result = run_sweep(spec);
    REQUIRE(result.rows.size() == 2);
    CHECK(result.any_failed);
    CHECK(result.rows[0].failed());
    CHECK(result.rows[0].error.find("narrower") != std::string::npos);
    CHECK(!result.rows[1].failed());

    std::ostringstream os;
    write_outcomes_csv(os, result);
    CHECK(os.str().find("error") != std::string::npos);
}

TEST_CASE("per-run diagnostics land in the output directory") {
    SweepSpec spec = tiny_sweep();
    spec.axes = {{"w", 1.0, 1.0, 1}};
    spec.output_dir = "sweep_outdir_test";
    run_sweep(spec);
    CHECK(std::filesystem::exists("sweep_outdir_test/w=1/diag.csv"));
    std::filesystem::remove_all("sweep_outdir_test");
}

TEST_CASE("outcomes csv layout") {
    const SweepResult table = synthetic_table(0.5, 3, 3);
    std::ostringstream os;
    write_outcomes_csv(os, table);
    std::string first_line = os.str().substr(0, os.str().find('\n'));
    CHECK(first_line == "w,theta,outcome,final_reaction_integral,final_front_x,error");
}

TEST_CASE("phase boundary recovers a synthetic threshold line") {
    const SweepResult table = synthetic_table(0.5, 7, 15);
    const auto boundary = phase_boundary(table, "w");
    REQUIRE(!boundary.empty());
    const double dtheta = (2.0 - 0.25) / 14.0;
    for (const BoundaryPoint& p : boundary) {
        CHECK(!p.mixed);
        CHECK(std::abs(p.boundary - 0.5 * p.primary) <= dtheta);
    }
    CHECK(fit_slope_through_origin(boundary) == doctest::Approx(0.5).epsilon(0.12));
}

TEST_CASE("phase boundary from the reduced cone model matches its slope") {
    // outcomes from the sign of r_theta over the sweep grid
    SweepResult table;
    for (int iw = 0; iw < 7; ++iw)
        for (int it = 0; it < 15; ++it) {
            SweepRow row;
            const double w = 1.0 + iw * 0.5;
            const double theta = 0.2 + it * 0.2;
            row.params = {{"w", w}, {"theta", theta}};
            row.outcome = cone_drive_r_theta(ConeModel(w, theta, 0.3)) > 0.0 ? Outcome::Crossed
                                                                             : Outcome::Blocked;
            table.rows.push_back(row);
        }
    const auto boundary = phase_boundary(table, "w");
    const double slope = cone_threshold_slope(0.3);
    for (const BoundaryPoint& p : boundary)
        CHECK(std::abs(p.boundary - slope * p.primary) <= 0.2); // one theta step
}

TEST_CASE("uniform columns yield no boundary; mixed columns warn") {
    SweepResult table = synthetic_table(0.5, 4, 6);
    // w = 1 column: threshold 0.5 below the theta range start? theta starts at 0.25
    // make one column uniform by force
    for (SweepRow& row : table.rows)
        if (row.params[0].second == 1.0) row.outcome = Outcome::Blocked;
    // and scramble one outcome deep inside another column
    for (SweepRow& row : table.rows)
        if (row.params[0].second == 4.0 && row.params[1].second > 1.9) {
            row.outcome = Outcome::Crossed;
            break;
        }
    const auto boundary = phase_boundary(table, "w");
    for (const BoundaryPoint& p : boundary) {
        CHECK(p.primary != 1.0); // uniform column has no entry
        if (p.primary == 4.0) CHECK(p.mixed);
    }
}

TEST_CASE("axis validation") {
    SweepSpec spec = tiny_sweep();
    spec.axes = {};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
    spec.axes = {{"nonsense", 0.0, 1.0, 2}};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
    spec.axes = {{"w", 0.0, 1.0, 0}};
    CHECK_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_SUITE_END();
