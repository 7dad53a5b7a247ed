#ifndef FRONTSIM_SOLVER_HPP
#define FRONTSIM_SOLVER_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontsim/field.hpp"
#include "frontsim/geometry.hpp"

namespace frontsim {

struct SolverConfig {
    double dt = 1e-3;
    double t_end = 200.0;
    double diag_every = 0.5;
    double snapshot_every = 0.0; // 0 disables snapshots
    double blowup_bound = 10.0;
    bool early_exit = false;     // stop as soon as the outcome is decided
    std::string snapshot_dir;    // empty: snapshots are not written
};

// Explicit-scheme stability bound dt / min(dx,dy)^2 < 1/2 (max b = 1).
struct CflResult {
    bool ok;
    double ratio;
};
CflResult cfl_check(double dt, const GridSpec& grid);

/** Finite-volume right-hand side of u_t = div(b grad u) + R(u): flux
 * differences with arithmetic-mean face coefficients and zero-flux walls. */
ScalarField rhs(const ScalarField& u, const DiffusionMap& b, const BistableParams& p);

class BlowupError : public std::runtime_error {
  public:
    BlowupError(double t, double value);
    double t;
    double value;
};

/** One classical RK4 step; throws BlowupError when the result leaves
 * [-bound, bound]. */
ScalarField rk4_step(const ScalarField& u, const DiffusionMap& b, const BistableParams& p,
                     double dt, double blowup_bound = 10.0);

double mean_u(const ScalarField& u);
double reaction_integral(const ScalarField& u, const BistableParams& p);

class NoCrossingError : public std::runtime_error {
  public:
    NoCrossingError();
};

// First downward crossing of u = 0.5 along row j, linearly interpolated.
std::optional<double> front_position_in_row(const ScalarField& u, int j);

// Same on the centerline row; throws NoCrossingError when the row never
// crosses 0.5.
double front_position(const ScalarField& u);

enum class Outcome { Crossed, Blocked, Undecided };
const char* to_string(Outcome o);

struct DiagSample {
    double t;
    double mean_u;
    double reaction_integral;
    double front_x; // NaN when the tracked rows have no 0.5 crossing
};

struct RunRecord {
    std::vector<DiagSample> series;
    Outcome outcome = Outcome::Undecided;
    double t_planned = 0.0; // configured duration
    double t_final = 0.0;   // time actually reached (less when early_exit fired)
    bool stopped_early = false;
    double u_min = 0.0, u_max = 0.0; // over the whole run
};

/** Time-steps the scenario from the exact front profile (clamped to the open
 * channel) to t_end, recording diagnostics every diag_every and optional
 * snapshots every snapshot_every. */
RunRecord run(const Scenario& s, const SolverConfig& cfg);

/** Crossed when the front passed 5 length units beyond the obstacle exit;
 * Blocked when over the final 20% of the run the front moved by less than dx
 * and the reaction integral stayed below 1% of its initial value; otherwise
 * Undecided. Requires at least 10 diagnostic samples. */
Outcome classify_outcome(const RunRecord& rec, const Scenario& s);

// x position past which the scenario counts as crossed
double crossing_threshold(const Scenario& s);

// CSV with header "t,mean_u,reaction_integral,front_x".
void write_diag_csv(std::ostream& os, const RunRecord& rec);

} // namespace frontsim

#endif
