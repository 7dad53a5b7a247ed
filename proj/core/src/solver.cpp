#include "frontsim/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <ostream>

#if defined(__SSE2__) || defined(__x86_64__)
#include <xmmintrin.h>
#define FRONTSIM_HAVE_MXCSR 1
#endif

#include "frontsim/snapshot.hpp"

namespace frontsim {

namespace {

// Subnormal tails develop deep inside obstacles and cost ~100 cycles per op
// on x86; they sit 300 orders of magnitude below anything physical, so the
// run loop flushes them to zero.
struct FlushDenormalsGuard {
#ifdef FRONTSIM_HAVE_MXCSR
    unsigned saved = _mm_getcsr();
    FlushDenormalsGuard() { _mm_setcsr(saved | 0x8040); } // FTZ | DAZ
    ~FlushDenormalsGuard() { _mm_setcsr(saved); }
#endif
};

constexpr double kCflLimit = 0.5;
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double kahan_sum(const std::vector<double>& v) {
    double sum = 0.0, c = 0.0;
    for (double x : v) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

/** Precomputed flux stencil for one DiffusionMap: face coefficients are
 * arithmetic means of the adjacent cell values, wall faces carry exactly
 * zero flux (the discrete conservation identity telescopes to round-off). */
struct Stencil {
    int nx, ny;
    double invdx2, invdy2;
    double a, s;
    std::vector<double> bx; // (nx+1) x ny, bx[j*(nx+1)+i] = face between cells i-1 and i
    std::vector<double> by; // nx x (ny+1), by[j*nx+i]     = face between rows j-1 and j
    mutable std::vector<double> fx; // per-row x-face flux buffer, sentinel walls at 0 and nx

    Stencil(const DiffusionMap& b, const BistableParams& p)
        : nx(b.grid().nx), ny(b.grid().ny),
          invdx2(1.0 / (b.grid().dx * b.grid().dx)),
          invdy2(1.0 / (b.grid().dy * b.grid().dy)),
          a(p.a), s(p.s),
          bx(static_cast<std::size_t>(nx + 1) * ny, 0.0),
          by(static_cast<std::size_t>(nx) * (ny + 1), 0.0),
          fx(static_cast<std::size_t>(nx) + 1, 0.0) {
        const double* bv = b.data();
        for (int j = 0; j < ny; ++j)
            for (int i = 1; i < nx; ++i)
                bx[static_cast<std::size_t>(j) * (nx + 1) + i] =
                    0.5 * (bv[static_cast<std::size_t>(j) * nx + i - 1] +
                           bv[static_cast<std::size_t>(j) * nx + i]);
        for (int j = 1; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                by[static_cast<std::size_t>(j) * nx + i] =
                    0.5 * (bv[static_cast<std::size_t>(j - 1) * nx + i] +
                           bv[static_cast<std::size_t>(j) * nx + i]);
    }

    // du/dt for one row; neighbor rows are read from u as needed
    void apply_row(const double* __restrict u, int j, double* __restrict dr) const {
        const double ra = a, rs = s;
        const double cx = invdx2, cy = invdy2;
        double* __restrict f = fx.data(); // f[0] = f[nx] = 0 stay put
        const double* __restrict ur = u + static_cast<std::size_t>(j) * nx;
        const double* __restrict bxr = bx.data() + static_cast<std::size_t>(j) * (nx + 1);

        for (int i = 1; i < nx; ++i) f[i] = bxr[i] * (ur[i] - ur[i - 1]);

        const bool south = j > 0, north = j < ny - 1;
        const double* __restrict us = ur - nx;
        const double* __restrict un = ur + nx;
        const double* __restrict bs = by.data() + static_cast<std::size_t>(j) * nx;
        const double* __restrict bn = by.data() + static_cast<std::size_t>(j + 1) * nx;
        if (south && north) {
            for (int i = 0; i < nx; ++i) {
                const double v = ur[i];
                dr[i] = cx * (f[i + 1] - f[i]) + cy * (bn[i] * (un[i] - v) - bs[i] * (v - us[i])) +
                        rs * v * (1.0 - v) * (v - ra);
            }
        } else if (north) {
            for (int i = 0; i < nx; ++i) {
                const double v = ur[i];
                dr[i] = cx * (f[i + 1] - f[i]) + cy * bn[i] * (un[i] - v) +
                        rs * v * (1.0 - v) * (v - ra);
            }
        } else if (south) {
            for (int i = 0; i < nx; ++i) {
                const double v = ur[i];
                dr[i] = cx * (f[i + 1] - f[i]) - cy * bs[i] * (v - us[i]) +
                        rs * v * (1.0 - v) * (v - ra);
            }
        } else {
            for (int i = 0; i < nx; ++i) {
                const double v = ur[i];
                dr[i] = cx * (f[i + 1] - f[i]) + rs * v * (1.0 - v) * (v - ra);
            }
        }
    }

    void apply(const double* u, double* du) const {
        for (int j = 0; j < ny; ++j) apply_row(u, j, du + static_cast<std::size_t>(j) * nx);
    }
};

struct StepRange {
    double lo, hi;
};

/** Classical RK4. Each stage fuses the slope evaluation with the stage
 * combine row by row, so the slope never leaves a row-sized buffer; the two
 * stage-input arrays ping-pong. */
class Rk4Stepper {
  public:
    Rk4Stepper(const DiffusionMap& b, const BistableParams& p, double dt)
        : st_(b, p), dt_(dt), va_(b.grid().size()), vb_(b.grid().size()),
          acc_(b.grid().size()), krow_(b.grid().nx) {}

    StepRange step(std::vector<double>& field) {
        const int nx = st_.nx, ny = st_.ny;
        const double half = 0.5 * dt_, full = dt_, sixth = dt_ / 6.0;
        double* __restrict u = field.data();
        double* __restrict va = va_.data();
        double* __restrict vb = vb_.data();
        double* __restrict acc = acc_.data();
        double* __restrict k = krow_.data();

        for (int j = 0; j < ny; ++j) {
            const std::size_t at = static_cast<std::size_t>(j) * nx;
            st_.apply_row(u, j, k);
            for (int i = 0; i < nx; ++i) {
                acc[at + i] = k[i];
                va[at + i] = u[at + i] + half * k[i];
            }
        }
        for (int j = 0; j < ny; ++j) {
            const std::size_t at = static_cast<std::size_t>(j) * nx;
            st_.apply_row(va, j, k);
            for (int i = 0; i < nx; ++i) {
                acc[at + i] += 2.0 * k[i];
                vb[at + i] = u[at + i] + half * k[i];
            }
        }
        for (int j = 0; j < ny; ++j) {
            const std::size_t at = static_cast<std::size_t>(j) * nx;
            st_.apply_row(vb, j, k);
            for (int i = 0; i < nx; ++i) {
                acc[at + i] += 2.0 * k[i];
                va[at + i] = u[at + i] + full * k[i];
            }
        }
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int j = 0; j < ny; ++j) {
            const std::size_t at = static_cast<std::size_t>(j) * nx;
            st_.apply_row(va, j, k);
            for (int i = 0; i < nx; ++i) {
                const double v = u[at + i] + sixth * (acc[at + i] + k[i]);
                u[at + i] = v;
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        return {lo, hi};
    }

    const Stencil& stencil() const { return st_; }

  private:
    Stencil st_;
    double dt_;
    std::vector<double> va_, vb_, acc_, krow_;
};

std::optional<double> scan_rows_for_front(const ScalarField& u, const std::vector<int>& rows) {
    std::optional<double> best;
    for (int j : rows) {
        auto p = front_position_in_row(u, j);
        if (p && (!best || *p > *best)) best = p;
    }
    return best;
}

std::vector<int> tracking_rows(const Scenario& s) {
    const GridSpec& g = s.domain;
    if (s.kind == ScenarioKind::ParallelGuides) {
        const double yc = s.center_y();
        const int j1 = static_cast<int>(std::lround((yc - 0.5 * s.d - g.y0) / g.dy));
        const int j2 = static_cast<int>(std::lround((yc + 0.5 * s.d - g.y0) / g.dy));
        return {std::clamp(j1, 0, g.ny - 1), std::clamp(j2, 0, g.ny - 1)};
    }
    return {g.ny / 2};
}

// Blocked means the front barely moved over the trailing window and the
// driving force has decayed below the floor by the end of it.
bool blocked_in_window(const std::vector<DiagSample>& series, double t_lo, double dx,
                       double drive_floor) {
    if (series.empty() || series.back().reaction_integral >= drive_floor) return false;
    double fmin = std::numeric_limits<double>::infinity(), fmax = -fmin;
    int count = 0;
    for (const DiagSample& d : series) {
        if (d.t < t_lo - 1e-12) continue;
        ++count;
        if (!std::isfinite(d.front_x)) return false;
        fmin = std::min(fmin, d.front_x);
        fmax = std::max(fmax, d.front_x);
    }
    return count >= 2 && (fmax - fmin) < dx;
}

std::string snapshot_path(const std::string& dir, double t) {
    char name[64];
    std::snprintf(name, sizeof name, "snap_t%012.6f.dat", t);
    return dir + "/" + name;
}

} // namespace

CflResult cfl_check(double dt, const GridSpec& grid) {
    const double h = std::min(grid.dx, grid.dy);
    const double ratio = dt / (h * h);
    // the bound is strict; a guard band keeps decimal boundary cases such
    // as dt = 0.005, dx = 0.1 (ratio 0.5 up to rounding) on the failing side
    return {ratio < kCflLimit - 1e-9, ratio};
}

BlowupError::BlowupError(double t_, double value_)
    : std::runtime_error("solution blew up at t = " + std::to_string(t_) +
                         " (|u| reached " + std::to_string(value_) + ")"),
      t(t_), value(value_) {}

NoCrossingError::NoCrossingError()
    : std::runtime_error("front_position: no 0.5 level crossing on the scan row") {}

ScalarField rhs(const ScalarField& u, const DiffusionMap& b, const BistableParams& p) {
    if (!(u.grid() == b.grid())) throw std::invalid_argument("rhs: field and map grids differ");
    Stencil st(b, p);
    ScalarField out(u.grid());
    st.apply(u.data(), out.data());
    return out;
}

ScalarField rk4_step(const ScalarField& u, const DiffusionMap& b, const BistableParams& p,
                     double dt, double blowup_bound) {
    if (!(u.grid() == b.grid())) throw std::invalid_argument("rk4_step: field and map grids differ");
    const CflResult cfl = cfl_check(dt, u.grid());
    if (!cfl.ok)
        throw std::invalid_argument("rk4_step: CFL violated, dt/h^2 = " + std::to_string(cfl.ratio));
    Rk4Stepper stepper(b, p, dt);
    ScalarField out = u;
    const StepRange r = stepper.step(out.values());
    const double worst = std::max(std::abs(r.lo), std::abs(r.hi));
    if (!(worst <= blowup_bound)) throw BlowupError(dt, worst);
    return out;
}

double mean_u(const ScalarField& u) { return integrate(u) / u.grid().area(); }

double reaction_integral(const ScalarField& u, const BistableParams& p) {
    double sum = 0.0, c = 0.0;
    for (double v : u.values()) {
        double y = reaction(v, p) - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum * u.grid().cell_area();
}

std::optional<double> front_position_in_row(const ScalarField& u, int j) {
    const GridSpec& g = u.grid();
    if (j < 0 || j >= g.ny) throw std::invalid_argument("front_position_in_row: row out of range");
    const double* row = u.data() + g.index(0, j);
    for (int i = 0; i + 1 < g.nx; ++i) {
        if (row[i] >= 0.5 && row[i + 1] < 0.5)
            return g.x(i) + g.dx * (row[i] - 0.5) / (row[i] - row[i + 1]);
    }
    return std::nullopt;
}

double front_position(const ScalarField& u) {
    auto p = front_position_in_row(u, u.grid().ny / 2);
    if (!p) throw NoCrossingError();
    return *p;
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Crossed: return "crossed";
        case Outcome::Blocked: return "blocked";
        case Outcome::Undecided: return "undecided";
    }
    return "?";
}

double crossing_threshold(const Scenario& s) {
    // UniformGuide has no obstacle; a steadily advancing front counts as
    // crossed once it has moved 10 length units.
    if (s.kind == ScenarioKind::UniformGuide) return s.front_x0 + 10.0;
    return obstacle_exit_x(s) + 5.0;
}

RunRecord run(const Scenario& s, const SolverConfig& cfg) {
    const FlushDenormalsGuard ftz;
    s.validate();
    const DiffusionMap b = rasterize(s);
    const GridSpec& g = s.domain;

    const CflResult cfl = cfl_check(cfg.dt, g);
    if (!cfl.ok)
        throw std::invalid_argument("run: CFL violated, dt/h^2 = " + std::to_string(cfl.ratio));
    if (!(cfg.diag_every >= cfg.dt))
        throw std::invalid_argument("run: diag_every must be >= dt");

    const BistableParams p(s.a, s.s);

    // exact front, width scaled by sqrt(s), zeroed inside obstacles
    ScalarField u(g);
    {
        const double kexp = std::sqrt(0.5 * s.s);
        const double* bv = b.data();
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const std::size_t idx = g.index(i, j);
                u.data()[idx] = (bv[idx] == 1.0)
                                    ? 1.0 / (1.0 + std::exp(kexp * (g.x(i) - s.front_x0)))
                                    : 0.0;
            }
    }

    const long long n_steps = std::max<long long>(1, std::llround(cfg.t_end / cfg.dt));
    const long long diag_stride = std::max<long long>(1, std::llround(cfg.diag_every / cfg.dt));
    const bool snapshots = cfg.snapshot_every > 0.0 && !cfg.snapshot_dir.empty();
    const long long snap_stride =
        snapshots ? std::max<long long>(1, std::llround(cfg.snapshot_every / cfg.dt)) : 0;
    if (snapshots) std::filesystem::create_directories(cfg.snapshot_dir);

    const std::vector<int> rows = tracking_rows(s);
    const double area = g.area();
    const double cross_x = crossing_threshold(s);
    const double window = 0.2 * cfg.t_end;

    RunRecord rec;
    rec.t_planned = cfg.t_end;

    auto sample = [&](double t) {
        auto front = scan_rows_for_front(u, rows);
        rec.series.push_back({t, kahan_sum(u.values()) * g.cell_area() / area,
                              reaction_integral(u, p), front ? *front : kNan});
    };

    sample(0.0);
    if (snapshots) write_snapshot(snapshot_path(cfg.snapshot_dir, 0.0), u, 0.0);
    rec.u_min = *std::min_element(u.values().begin(), u.values().end());
    rec.u_max = *std::max_element(u.values().begin(), u.values().end());

    Rk4Stepper stepper(b, p, cfg.dt);
    const double drive_floor = 0.01 * rec.series.front().reaction_integral;

    double t = 0.0;
    for (long long step = 1; step <= n_steps; ++step) {
        const StepRange r = stepper.step(u.values());
        t = step * cfg.dt;
        rec.u_min = std::min(rec.u_min, r.lo);
        rec.u_max = std::max(rec.u_max, r.hi);
        const double worst = std::max(std::abs(r.lo), std::abs(r.hi));
        if (!(worst <= cfg.blowup_bound)) throw BlowupError(t, worst);

        if (step % diag_stride == 0 || step == n_steps) {
            sample(t);
            if (cfg.early_exit) {
                const DiagSample& last = rec.series.back();
                const bool crossed = std::isfinite(last.front_x) && last.front_x > cross_x;
                const bool blocked = !crossed && t >= window && rec.series.size() >= 10 &&
                                     blocked_in_window(rec.series, t - window, g.dx, drive_floor);
                if (crossed || blocked) {
                    rec.stopped_early = (step != n_steps);
                    break;
                }
            }
        }
        if (snapshots && step % snap_stride == 0)
            write_snapshot(snapshot_path(cfg.snapshot_dir, t), u, t);
    }

    rec.t_final = t;
    rec.outcome = rec.series.size() >= 10 ? classify_outcome(rec, s) : Outcome::Undecided;
    return rec;
}

Outcome classify_outcome(const RunRecord& rec, const Scenario& s) {
    if (rec.series.size() < 10)
        throw std::invalid_argument("classify_outcome: needs at least 10 diagnostic samples");

    const double cross_x = crossing_threshold(s);
    for (const DiagSample& d : rec.series)
        if (std::isfinite(d.front_x) && d.front_x > cross_x) return Outcome::Crossed;

    const double window = 0.2 * rec.t_planned;
    const double drive_floor = 0.01 * rec.series.front().reaction_integral;
    if (rec.t_final >= window &&
        blocked_in_window(rec.series, rec.t_final - window, s.domain.dx, drive_floor))
        return Outcome::Blocked;
    return Outcome::Undecided;
}

void write_diag_csv(std::ostream& os, const RunRecord& rec) {
    os.precision(17);
    os << "t,mean_u,reaction_integral,front_x\n";
    for (const DiagSample& d : rec.series)
        os << d.t << ',' << d.mean_u << ',' << d.reaction_integral << ',' << d.front_x << '\n';
}

} // namespace frontsim
