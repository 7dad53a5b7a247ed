// frontsim: bistable reaction-diffusion fronts meeting geometric obstacles.
//
// Subcommands:
//   run      integrate one scenario, write diag.csv (+ optional snapshots)
//   sweep    run a 1- or 2-axis parameter grid, write outcomes.csv
//   predict  reduced-model tables: r(h), r_theta, thresholds, mode decay
//   radial   static radial profile by relaxation, write r,u CSV

#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "frontsim/config.hpp"
#include "frontsim/kink.hpp"
#include "frontsim/radial.hpp"
#include "frontsim/snapshot.hpp"
#include "frontsim/solver.hpp"
#include "frontsim/sweep.hpp"

namespace fs = std::filesystem;
using namespace frontsim;

namespace {

struct KeyOverride {
    std::string key; // section.key
    CLI::Option* opt = nullptr;
    std::string value;
};

/** Registers one --flag per config key; set flags override file entries. */
class ConfigCli {
  public:
    ConfigCli(CLI::App* app, bool with_sweep) {
        app->add_option("-c,--config", config_path_, "configuration file")
            ->check(CLI::ExistingFile);
        static const char* scenario_keys[] = {"kind", "w", "w1", "w2", "theta", "d",
                                              "radius", "wb", "a", "s", "b_inside", "front_x0"};
        static const char* domain_keys[] = {"x0", "y0", "lx", "ly", "dx", "dy"};
        static const char* solver_keys[] = {"dt", "t_end", "diag_every", "snapshot_every",
                                            "blowup_bound", "early_exit"};
        static const char* sweep_keys[] = {"axis1", "axis2", "workers", "output"};
        for (const char* k : scenario_keys) add(app, "scenario", k);
        for (const char* k : domain_keys) add(app, "domain", k);
        for (const char* k : solver_keys) add(app, "solver", k);
        if (with_sweep)
            for (const char* k : sweep_keys) add(app, "sweep", k);
    }

    ParsedConfig parse() const {
        RawConfig raw;
        if (!config_path_.empty()) {
            std::ifstream is(config_path_);
            std::stringstream buf;
            buf << is.rdbuf();
            raw = parse_raw_config(buf.str());
        }
        for (const auto& ov : overrides_)
            if (ov.opt->count() > 0) raw[ov.key] = {ov.value, -1};
        return build_config(raw);
    }

  private:
    void add(CLI::App* app, const std::string& section, const std::string& key) {
        overrides_.push_back({section + "." + key, nullptr, {}});
        KeyOverride& ov = overrides_.back();
        ov.opt = app->add_option("--" + key, ov.value, "config key [" + section + "]");
    }

    std::string config_path_;
    // deque keeps KeyOverride addresses stable for CLI11 bindings
    std::deque<KeyOverride> overrides_;
};

void report_run(const RunRecord& rec) {
    const DiagSample& last = rec.series.back();
    std::printf("outcome: %s\n", to_string(rec.outcome));
    std::printf("t_final: %g%s\n", rec.t_final, rec.stopped_early ? " (early exit)" : "");
    std::printf("mean_u: %.8g  reaction_integral: %.8g  front_x: %.8g\n", last.mean_u,
                last.reaction_integral, last.front_x);
    std::printf("u range over run: [%.6g, %.6g]\n", rec.u_min, rec.u_max);
}

int cmd_run(const ConfigCli& cli, const std::string& out_dir, bool dump_map) {
    ParsedConfig pc = cli.parse();
    SolverConfig cfg = pc.solver;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        if (cfg.snapshot_every > 0.0) cfg.snapshot_dir = out_dir;
    }
    if (dump_map) {
        const DiffusionMap map = rasterize(pc.scenario);
        ScalarField as_field(map.grid(), map.values());
        write_snapshot(out_dir.empty() ? "map.dat" : out_dir + "/map.dat", as_field, 0.0);
    }
    const RunRecord rec = run(pc.scenario, cfg);
    if (!out_dir.empty()) {
        std::ofstream os(out_dir + "/diag.csv");
        write_diag_csv(os, rec);
    } else {
        write_diag_csv(std::cout, rec);
    }
    report_run(rec);
    return 0;
}

int cmd_sweep(const ConfigCli& cli) {
    ParsedConfig pc = cli.parse();
    const SweepSpec spec = pc.sweep_spec();
    const SweepResult result = run_sweep(spec);

    fs::create_directories(spec.output_dir);
    {
        std::ofstream os(spec.output_dir + "/outcomes.csv");
        write_outcomes_csv(os, result);
    }
    int errors = 0;
    for (const SweepRow& row : result.rows)
        if (row.failed()) ++errors;
    std::printf("%zu points, %d failed; outcomes in %s/outcomes.csv\n", result.rows.size(),
                errors, spec.output_dir.c_str());

    if (spec.axes.size() == 2) {
        const auto boundary = phase_boundary(result, spec.axes[0].name);
        std::ofstream os(spec.output_dir + "/boundary.csv");
        write_boundary_csv(os, boundary);
        if (!boundary.empty()) {
            const double slope = fit_slope_through_origin(boundary);
            std::printf("phase boundary: %zu points, through-origin slope %.5g\n",
                        boundary.size(), slope);
            for (const BoundaryPoint& p : boundary)
                if (p.mixed)
                    std::printf("warning: outcomes not cleanly two-phase at %s = %g\n",
                                spec.axes[0].name.c_str(), p.primary);
        } else {
            std::printf("phase boundary: no transition found\n");
        }
    }
    return result.any_failed ? 1 : 0;
}

void csv_out(const std::optional<std::string>& path, const std::function<void(std::ostream&)>& fn) {
    if (path) {
        std::ofstream os(*path);
        fn(os);
    } else {
        fn(std::cout);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bistable front propagation through obstacles"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "integrate one scenario");
    ConfigCli run_cli(run_cmd, false);
    std::string run_out;
    bool dump_map = false;
    run_cmd->add_option("-o,--out", run_out, "output directory (default: stdout CSV)");
    run_cmd->add_flag("--dump-map", dump_map, "write the rasterized diffusion map");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter grid");
    ConfigCli sweep_cli(sweep_cmd, true);

    // predict
    auto* predict = app.add_subcommand("predict", "reduced-model tables");
    predict->require_subcommand(1);
    double pa = 0.3, pw1 = 4.0, pw2 = 20.0, pw = 4.0, ptheta = 1.4, pk = 0.0;
    int pm = 1, pn = 2, pcount = 201;
    double phmin = -20.0, phmax = 20.0, pwmin = 1.0, pwmax = 8.0;
    std::optional<std::string> pout;

    auto* rh = predict->add_subcommand("rh", "junction driving force r(h) as CSV");
    rh->add_option("--w1", pw1);
    rh->add_option("--w2", pw2);
    rh->add_option("--a", pa);
    rh->add_option("--hmin", phmin);
    rh->add_option("--hmax", phmax);
    rh->add_option("--count", pcount);
    rh->add_option("--out", pout);

    auto* trap = predict->add_subcommand("trap", "junction trapping position");
    trap->add_option("--w1", pw1);
    trap->add_option("--w2", pw2);
    trap->add_option("--a", pa);

    auto* cone = predict->add_subcommand("cone", "cone driving force r_theta");
    cone->add_option("--w", pw);
    cone->add_option("--theta", ptheta);
    cone->add_option("--a", pa);
    cone->add_option("--n", pn);

    auto* thr = predict->add_subcommand("threshold", "blocking threshold line as CSV");
    thr->add_option("--a", pa);
    thr->add_option("--wmin", pwmin);
    thr->add_option("--wmax", pwmax);
    thr->add_option("--count", pcount);
    thr->add_option("--out", pout);

    auto* modes = predict->add_subcommand("modes", "transverse mode decay rate");
    modes->add_option("--w", pw);
    modes->add_option("--k", pk);
    modes->add_option("--m", pm);

    // radial
    auto* radial = app.add_subcommand("radial", "static radial profile by relaxation");
    RadialProblem rp;
    bool neumann_origin = false;
    double kink_center = 0.0, kink_width = 0.5, kink_rmin = 0.0;
    std::optional<std::string> rout;
    radial->add_option("--L", rp.L);
    radial->add_option("--n", rp.n);
    radial->add_option("--K", rp.K);
    radial->add_option("--a", rp.a);
    radial->add_option("--u0", rp.u0);
    radial->add_option("--tol", rp.tol);
    radial->add_option("--max-iter", rp.max_iter);
    radial->add_flag("--neumann-origin", neumann_origin, "free origin instead of pinning u0");
    radial->add_option("--kink-center", kink_center);
    radial->add_option("--kink-width", kink_width);
    radial->add_option("--kink-rmin", kink_rmin, "ignore r below this in the comparison");
    radial->add_option("--out", rout);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(run_cli, run_out, dump_map);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep_cli);

        if (predict->parsed()) {
            if (rh->parsed()) {
                const JunctionModel m(pw1, pw2, pa);
                csv_out(pout, [&](std::ostream& os) {
                    os.precision(12);
                    os << "h,r\n";
                    for (int i = 0; i < pcount; ++i) {
                        const double h =
                            pcount > 1 ? phmin + i * (phmax - phmin) / (pcount - 1) : phmin;
                        os << h << ',' << junction_drive_r(h, m) << '\n';
                    }
                });
            } else if (trap->parsed()) {
                const JunctionModel m(pw1, pw2, pa);
                const auto h = trapping_position(m);
                if (h)
                    std::printf("trapped at h = %.10g (min r = %.10g)\n", *h,
                                junction_drive_min(m));
                else
                    std::printf("no trapping position (min r = %.10g > 0)\n",
                                junction_drive_min(m));
            } else if (cone->parsed()) {
                const ConeModel m(pw, ptheta, pa, pn);
                const double r = cone_drive_ndim(m);
                std::printf("r_theta(n=%d) = %.10g -> %s\n", pn, r,
                            r > 0.0 ? "crossing" : "no crossing");
            } else if (thr->parsed()) {
                const double slope = cone_threshold_slope(pa);
                csv_out(pout, [&](std::ostream& os) {
                    os.precision(12);
                    os << "w,theta_c,theta_empirical\n";
                    for (int i = 0; i < pcount; ++i) {
                        const double w =
                            pcount > 1 ? pwmin + i * (pwmax - pwmin) / (pcount - 1) : pwmin;
                        os << w << ',' << w * slope << ',' << w * kConeThresholdSlopeEmpirical
                           << '\n';
                    }
                });
                std::fprintf(stderr, "slope %.6g (formula), %.6g (empirical, a=0.3)\n", slope,
                             kConeThresholdSlopeEmpirical);
            } else if (modes->parsed()) {
                const ModeDecay m(pw, pk, pm);
                std::printf("omega_%d = %.10g (2D-effects width w* = %.10g)\n", pm,
                            mode_decay_rate(m), kTwoDimEffectsWidth);
            }
            return 0;
        }

        if (radial->parsed()) {
            rp.pin_origin = !neumann_origin;
            const RadialSolution sol = relax_solve(rp);
            csv_out(rout, [&](std::ostream& os) { write_profile_csv(os, sol); });
            std::fprintf(stderr, "converged in %d iterations (residual %.3g)\n", sol.iterations,
                         sol.residual);
            std::fprintf(stderr, "Linf vs kink(center=%g, width=%g): %.6g\n", kink_center,
                         kink_width, compare_to_kink(sol, kink_center, kink_width, kink_rmin));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
