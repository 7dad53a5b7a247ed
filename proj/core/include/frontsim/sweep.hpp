#ifndef FRONTSIM_SWEEP_HPP
#define FRONTSIM_SWEEP_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "frontsim/geometry.hpp"
#include "frontsim/solver.hpp"

namespace frontsim {

/** One swept parameter: `count` evenly spaced values on [min, max]. */
struct SweepAxis {
    std::string name;
    double min = 0.0, max = 0.0;
    int count = 1;

    double value(int k) const {
        return count > 1 ? min + k * (max - min) / (count - 1) : min;
    }
};

/** A grid of scenarios: the template with one or two parameters swept. */
struct SweepSpec {
    Scenario scenario;
    std::vector<SweepAxis> axes; // 1 or 2
    SolverConfig solver;
    std::string output_dir; // empty: no per-run diag/snapshot files
    int workers = 0;        // 0 = hardware concurrency
};

struct SweepRow {
    std::vector<std::pair<std::string, double>> params;
    Outcome outcome = Outcome::Undecided;
    double final_reaction_integral = 0.0;
    double final_front_x = 0.0;
    std::string error; // nonempty when this point failed

    bool failed() const { return !error.empty(); }
};

struct SweepResult {
    std::vector<SweepRow> rows; // sorted lexicographically by parameter values
    bool any_failed = false;
};

bool is_sweepable_param(const std::string& name);
void set_scenario_param(Scenario& s, const std::string& name, double value);

/** Runs every grid point (failures become error rows, the sweep continues)
 * and returns rows sorted by parameter values regardless of worker count. */
SweepResult run_sweep(const SweepSpec& spec);

// header "<p1>,<p2>,outcome,final_reaction_integral,final_front_x,error"
void write_outcomes_csv(std::ostream& os, const SweepResult& result);

/** Boundary between the Blocked and Crossed phases: for each value of the
 * primary axis, the midpoint between the last point of one phase and the
 * first point of the other along the secondary axis. `mixed` flags columns
 * whose outcomes are not cleanly two-phase (boundary from the first
 * transition). Columns with a uniform outcome contribute no entry. */
struct BoundaryPoint {
    double primary;
    double boundary;
    bool mixed;
};
std::vector<BoundaryPoint> phase_boundary(const SweepResult& table, const std::string& primary_axis);

// least-squares slope of boundary = slope * primary through the origin
double fit_slope_through_origin(const std::vector<BoundaryPoint>& boundary);

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& boundary);

} // namespace frontsim

#endif
