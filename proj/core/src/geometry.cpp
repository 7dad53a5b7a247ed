#include "frontsim/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace frontsim {

namespace {

constexpr double kOutflowMargin = 5.0; // clearance required past the obstacle exit

GridSpec centered_grid(int nx, int ny, double x0, double dx = 0.1, double dy = 0.1) {
    // transverse centers symmetric about y = 0
    const double y0 = -0.5 * (ny - 1) * dy;
    return GridSpec(nx, ny, dx, dy, x0, y0);
}

double hole_center_x(const Scenario& s) {
    return s.domain.x0 + 0.5 * (s.domain.nx - 1) * s.domain.dx;
}

double checker_start_x(const Scenario& s) {
    return s.domain.x0 + 0.5 * s.domain.nx * s.domain.dx;
}

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("Scenario: " + msg); }

void require(bool ok, const char* msg) {
    if (!ok) fail(msg);
}

} // namespace

const char* to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::UniformGuide: return "uniform";
        case ScenarioKind::Junction: return "junction";
        case ScenarioKind::Cone: return "cone";
        case ScenarioKind::ParallelGuides: return "parallel";
        case ScenarioKind::Hole: return "hole";
        case ScenarioKind::Checkerboard: return "checkerboard";
    }
    return "?";
}

ScenarioKind scenario_kind_from_string(const std::string& name) {
    if (name == "uniform") return ScenarioKind::UniformGuide;
    if (name == "junction") return ScenarioKind::Junction;
    if (name == "cone") return ScenarioKind::Cone;
    if (name == "parallel") return ScenarioKind::ParallelGuides;
    if (name == "hole") return ScenarioKind::Hole;
    if (name == "checkerboard") return ScenarioKind::Checkerboard;
    throw std::invalid_argument("unknown scenario kind '" + name + "'");
}

Scenario Scenario::uniform_guide(double w) {
    Scenario s;
    s.kind = ScenarioKind::UniformGuide;
    s.w = w;
    const int ny = std::max(1, static_cast<int>(std::lround(w / 0.1)));
    s.domain = centered_grid(1000, ny, 0.0);
    s.front_x0 = 10.0;
    return s;
}

Scenario Scenario::junction(double w1, double w2) {
    Scenario s;
    s.kind = ScenarioKind::Junction;
    s.w1 = w1;
    s.w2 = w2;
    s.domain = centered_grid(400, 900, -20.0);
    s.front_x0 = -10.0;
    return s;
}

Scenario Scenario::cone(double w, double theta) {
    Scenario s;
    s.kind = ScenarioKind::Cone;
    s.w = w;
    s.theta = theta;
    s.domain = centered_grid(600, 900, -20.0);
    s.front_x0 = -10.0;
    return s;
}

Scenario Scenario::parallel_guides(double w, double d) {
    Scenario s;
    s.kind = ScenarioKind::ParallelGuides;
    s.w = w;
    s.d = d;
    s.domain = centered_grid(400, 600, -20.0);
    s.front_x0 = -10.0;
    return s;
}

Scenario Scenario::hole(double radius) {
    Scenario s;
    s.kind = ScenarioKind::Hole;
    s.radius = radius;
    s.domain = GridSpec(800, 600, 0.1, 0.1, 0.0, 0.0);
    s.front_x0 = hole_center_x(s) - radius - 10.0;
    return s;
}

Scenario Scenario::checkerboard(double w1, double wb) {
    Scenario s;
    s.kind = ScenarioKind::Checkerboard;
    s.w1 = w1;
    s.wb = wb;
    s.domain = GridSpec(400, 300, 0.1, 0.1, 0.0, 0.0);
    s.front_x0 = checker_start_x(s) - 10.0;
    return s;
}

double Scenario::obstacle_start_x() const {
    switch (kind) {
        case ScenarioKind::UniformGuide: fail("UniformGuide has no obstacle");
        case ScenarioKind::Junction:
        case ScenarioKind::Cone:
        case ScenarioKind::ParallelGuides: return 0.0;
        case ScenarioKind::Hole: return hole_center_x(*this) - radius;
        case ScenarioKind::Checkerboard: return checker_start_x(*this);
    }
    fail("bad kind");
}

double obstacle_exit_x(const Scenario& s) {
    switch (s.kind) {
        case ScenarioKind::UniformGuide:
            throw std::invalid_argument("obstacle_exit_x: not defined for UniformGuide");
        case ScenarioKind::Junction:
        case ScenarioKind::Cone:
        case ScenarioKind::ParallelGuides: return 0.0;
        case ScenarioKind::Hole: return hole_center_x(s) + s.radius;
        case ScenarioKind::Checkerboard: return checker_start_x(s) + s.wb;
    }
    throw std::invalid_argument("obstacle_exit_x: bad kind");
}

void Scenario::validate() const {
    require(a > 0.0 && a < 1.0, "a must lie in (0, 1)");
    require(s > 0.0, "s must be > 0");
    require(b_inside > 0.0 && b_inside < 1.0, "b_inside must lie in (0, 1)");
    require(dt > 0.0, "dt must be > 0");
    require(t_end > 0.0, "t_end must be > 0");
    require(front_x0 >= domain.x_min() && front_x0 <= domain.x_max(),
            "front_x0 outside the domain");

    const double ly = domain.ny * domain.dy;
    switch (kind) {
        case ScenarioKind::UniformGuide:
            require(w > 0.0, "uniform guide needs w > 0");
            break;
        case ScenarioKind::Junction:
            require(w1 > 0.0 && w2 > 0.0, "junction needs w1, w2 > 0");
            require(std::max(w1, w2) <= ly, "junction wider than the domain");
            break;
        case ScenarioKind::Cone:
            require(w > 0.0, "cone needs w > 0");
            require(theta > 0.0 && theta <= std::numbers::pi, "cone needs theta in (0, pi]");
            break;
        case ScenarioKind::ParallelGuides:
            require(w > 0.0 && d > 0.0, "parallel guides need w, d > 0");
            require(d + w <= ly, "parallel guides wider than the domain");
            break;
        case ScenarioKind::Hole:
            require(radius > 0.0, "hole needs radius > 0");
            require(2.0 * radius <= ly, "hole taller than the domain");
            break;
        case ScenarioKind::Checkerboard:
            require(w1 > 0.0 && wb > w1, "checkerboard needs 0 < w1 < wb");
            break;
    }

    if (kind != ScenarioKind::UniformGuide) {
        require(front_x0 < obstacle_start_x(), "front_x0 must start left of the obstacle");
        // keep the far field clean so the outcome diagnostics are meaningful
        require(obstacle_exit_x(*this) + kOutflowMargin <= domain.x_max() + 1e-12,
                "domain too short past the obstacle (need 5 length units)");
    }
}

DiffusionMap rasterize(const Scenario& s) {
    s.validate();

    const GridSpec& g = s.domain;
    const double yc = s.center_y();
    const double res = 3.0 * std::max(g.dx, g.dy);

    double min_channel = std::numeric_limits<double>::infinity();
    switch (s.kind) {
        case ScenarioKind::UniformGuide:
        case ScenarioKind::Cone:
        case ScenarioKind::ParallelGuides: min_channel = s.w; break;
        case ScenarioKind::Junction: min_channel = std::min(s.w1, s.w2); break;
        case ScenarioKind::Checkerboard: min_channel = s.w1; break;
        case ScenarioKind::Hole: break; // open domain, nothing to under-resolve
    }
    if (min_channel < res)
        throw std::invalid_argument("rasterize: open channel narrower than 3 cells");

    std::vector<double> b(g.size(), 1.0);
    auto set_obstacles = [&](auto&& inside_obstacle) {
        for (int j = 0; j < g.ny; ++j) {
            const double y = g.y(j);
            for (int i = 0; i < g.nx; ++i)
                if (inside_obstacle(g.x(i), y)) b[g.index(i, j)] = s.b_inside;
        }
    };

    switch (s.kind) {
        case ScenarioKind::UniformGuide:
            set_obstacles([&](double, double y) { return std::abs(y - yc) > 0.5 * s.w; });
            break;
        case ScenarioKind::Junction:
            set_obstacles([&](double x, double y) {
                const double half = (x < 0.0) ? 0.5 * s.w1 : 0.5 * s.w2;
                return std::abs(y - yc) > half;
            });
            break;
        case ScenarioKind::Cone:
            // wedge edges start at the channel corners; a point above the
            // channel is accessible when its polar angle from the corner
            // (measured from the +x wall direction) does not exceed theta
            set_obstacles([&](double x, double y) {
                const double off = std::abs(y - yc) - 0.5 * s.w;
                if (off <= 0.0) return false;
                return std::atan2(off, x) > s.theta;
            });
            break;
        case ScenarioKind::ParallelGuides:
            set_obstacles([&](double x, double y) {
                if (x >= 0.0) return false; // cavity
                return std::abs(std::abs(y - yc) - 0.5 * s.d) > 0.5 * s.w;
            });
            break;
        case ScenarioKind::Hole: {
            const double cx = hole_center_x(s);
            const double r2 = s.radius * s.radius;
            set_obstacles([&](double x, double y) {
                const double ddx = x - cx, ddy = y - yc;
                return ddx * ddx + ddy * ddy <= r2;
            });
            break;
        }
        case ScenarioKind::Checkerboard: {
            const double sx = checker_start_x(s);
            const double side = s.wb - s.w1;
            set_obstacles([&](double x, double y) {
                if (x < sx || x >= sx + side) return false;
                // gaps of width w1 centered on yc + k*wb
                return std::abs(std::remainder(y - yc, s.wb)) >= 0.5 * s.w1;
            });
            break;
        }
    }

    return DiffusionMap(g, std::move(b));
}

} // namespace frontsim
