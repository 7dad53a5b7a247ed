#include "frontsim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace frontsim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string point_tag(const SweepRow& row) {
    std::string tag;
    for (const auto& [name, value] : row.params) {
        if (!tag.empty()) tag += '_';
        tag += name + "=" + format_value(value);
    }
    return tag;
}

} // namespace

bool is_sweepable_param(const std::string& name) {
    static const char* names[] = {"w", "w1", "w2", "theta", "d",
                                  "radius", "wb", "a", "s", "b_inside", "front_x0"};
    return std::find_if(std::begin(names), std::end(names),
                        [&](const char* n) { return name == n; }) != std::end(names);
}

void set_scenario_param(Scenario& s, const std::string& name, double value) {
    if (name == "w") s.w = value;
    else if (name == "w1") s.w1 = value;
    else if (name == "w2") s.w2 = value;
    else if (name == "theta") s.theta = value;
    else if (name == "d") s.d = value;
    else if (name == "radius") s.radius = value;
    else if (name == "wb") s.wb = value;
    else if (name == "a") s.a = value;
    else if (name == "s") s.s = value;
    else if (name == "b_inside") s.b_inside = value;
    else if (name == "front_x0") s.front_x0 = value;
    else throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.axes.empty() || spec.axes.size() > 2)
        throw std::invalid_argument("run_sweep: need 1 or 2 axes");
    for (const SweepAxis& ax : spec.axes) {
        if (ax.count < 1) throw std::invalid_argument("run_sweep: axis count must be >= 1");
        if (!is_sweepable_param(ax.name))
            throw std::invalid_argument("run_sweep: unknown axis '" + ax.name + "'");
    }

    const int n1 = spec.axes[0].count;
    const int n2 = spec.axes.size() == 2 ? spec.axes[1].count : 1;
    const int total = n1 * n2;

    SweepResult result;
    result.rows.resize(total);

    if (!spec.output_dir.empty()) std::filesystem::create_directories(spec.output_dir);

    auto run_point = [&](int idx) {
        SweepRow& row = result.rows[idx];
        row.params.emplace_back(spec.axes[0].name, spec.axes[0].value(idx / n2));
        if (spec.axes.size() == 2)
            row.params.emplace_back(spec.axes[1].name, spec.axes[1].value(idx % n2));
        row.final_reaction_integral = kNan;
        row.final_front_x = kNan;
        try {
            Scenario sc = spec.scenario;
            for (const auto& [name, value] : row.params) set_scenario_param(sc, name, value);
            sc.validate();

            SolverConfig cfg = spec.solver;
            std::string dir;
            if (!spec.output_dir.empty()) {
                dir = spec.output_dir + "/" + point_tag(row);
                std::filesystem::create_directories(dir);
                if (cfg.snapshot_every > 0.0) cfg.snapshot_dir = dir;
            }

            const RunRecord rec = run(sc, cfg);
            row.outcome = rec.outcome;
            row.final_reaction_integral = rec.series.back().reaction_integral;
            row.final_front_x = rec.series.back().front_x;
            if (!dir.empty()) {
                std::ofstream os(dir + "/diag.csv");
                write_diag_csv(os, rec);
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    int workers = spec.workers > 0 ? spec.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, total);
    if (workers == 1) {
        for (int idx = 0; idx < total; ++idx) run_point(idx);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1))
                    run_point(idx);
            });
        for (std::thread& th : pool) th.join();
    }

    std::sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        for (std::size_t k = 0; k < a.params.size(); ++k)
            if (a.params[k].second != b.params[k].second)
                return a.params[k].second < b.params[k].second;
        return false;
    });
    result.any_failed =
        std::any_of(result.rows.begin(), result.rows.end(), [](const SweepRow& r) { return r.failed(); });
    return result;
}

void write_outcomes_csv(std::ostream& os, const SweepResult& result) {
    if (result.rows.empty()) return;
    os.precision(17);
    for (const auto& [name, value] : result.rows.front().params) os << name << ',';
    os << "outcome,final_reaction_integral,final_front_x,error\n";
    for (const SweepRow& row : result.rows) {
        for (const auto& [name, value] : row.params) os << value << ',';
        os << (row.failed() ? "error" : to_string(row.outcome)) << ','
           << row.final_reaction_integral << ',' << row.final_front_x << ',' << row.error << '\n';
    }
}

std::vector<BoundaryPoint> phase_boundary(const SweepResult& table, const std::string& primary_axis) {
    // group rows by the primary value; rows are already sorted, so the
    // secondary values inside a group are in ascending order
    std::map<double, std::vector<const SweepRow*>> columns;
    for (const SweepRow& row : table.rows) {
        if (row.params.size() != 2)
            throw std::invalid_argument("phase_boundary: needs a 2-axis sweep table");
        if (row.params[0].first != primary_axis && row.params[1].first != primary_axis)
            throw std::invalid_argument("phase_boundary: no axis named '" + primary_axis + "'");
        const bool primary_first = row.params[0].first == primary_axis;
        columns[row.params[primary_first ? 0 : 1].second].push_back(&row);
    }

    std::vector<BoundaryPoint> boundary;
    for (auto& [primary, rows] : columns) {
        std::vector<std::pair<double, Outcome>> pts;
        for (const SweepRow* row : rows) {
            if (row->failed() || row->outcome == Outcome::Undecided) continue;
            const bool primary_first = row->params[0].first == primary_axis;
            pts.emplace_back(row->params[primary_first ? 1 : 0].second, row->outcome);
        }
        std::sort(pts.begin(), pts.end());
        if (pts.size() < 2) continue;

        std::size_t transition = 0;
        for (std::size_t k = 1; k < pts.size(); ++k)
            if (pts[k].second != pts.front().second) {
                transition = k;
                break;
            }
        if (transition == 0) continue; // uniform outcome, no boundary here

        bool mixed = false;
        for (std::size_t k = transition; k < pts.size(); ++k)
            if (pts[k].second != pts[transition].second) mixed = true;

        boundary.push_back({primary, 0.5 * (pts[transition - 1].first + pts[transition].first), mixed});
    }
    return boundary;
}

double fit_slope_through_origin(const std::vector<BoundaryPoint>& boundary) {
    double sxy = 0.0, sxx = 0.0;
    for (const BoundaryPoint& p : boundary) {
        sxy += p.primary * p.boundary;
        sxx += p.primary * p.primary;
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_slope_through_origin: empty boundary");
    return sxy / sxx;
}

void write_boundary_csv(std::ostream& os, const std::vector<BoundaryPoint>& boundary) {
    os.precision(17);
    os << "primary,boundary,mixed\n";
    for (const BoundaryPoint& p : boundary)
        os << p.primary << ',' << p.boundary << ',' << (p.mixed ? 1 : 0) << '\n';
}

} // namespace frontsim
