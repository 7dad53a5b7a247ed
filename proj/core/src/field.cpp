#include "frontsim/field.hpp"

#include <stdexcept>
#include <string>

namespace frontsim {

GridSpec::GridSpec(int nx_, int ny_, double dx_, double dy_, double x0_, double y0_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), x0(x0_), y0(y0_) {
    if (nx < 3) throw std::invalid_argument("GridSpec: nx must be >= 3, got " + std::to_string(nx));
    if (ny < 1) throw std::invalid_argument("GridSpec: ny must be >= 1, got " + std::to_string(ny));
    if (!(dx > 0.0) || !(dy > 0.0)) throw std::invalid_argument("GridSpec: dx, dy must be > 0");
}

ScalarField::ScalarField(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("ScalarField: values length != nx*ny");
    for (double v : values_)
        if (!std::isfinite(v)) throw std::invalid_argument("ScalarField: non-finite value");
}

DiffusionMap::DiffusionMap(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw std::invalid_argument("DiffusionMap: values length != nx*ny");
    for (double v : values_)
        if (!(v > 0.0) || v > 1.0)
            throw std::invalid_argument("DiffusionMap: values must lie in (0, 1]");
}

BistableParams::BistableParams(double a_, double s_) : a(a_), s(s_) {
    if (!(a > 0.0) || !(a < 1.0))
        throw std::invalid_argument("BistableParams: a must lie in (0, 1)");
    if (!(s > 0.0)) throw std::invalid_argument("BistableParams: s must be > 0");
}

ScalarField front_profile(const GridSpec& grid, double center_x, const BistableParams& p) {
    if (p.s != 1.0)
        throw std::invalid_argument("front_profile: exact profile requires s == 1");
    ScalarField f(grid);
    const double k = std::sqrt(0.5);
    std::vector<double> row(grid.nx);
    for (int i = 0; i < grid.nx; ++i)
        row[i] = 1.0 / (1.0 + std::exp(k * (grid.x(i) - center_x)));
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i)
            f(i, j) = row[i];
    return f;
}

double integrate(const ScalarField& field) {
    // Kahan summation so linearity holds to ~1e-15 even on large grids.
    double sum = 0.0, c = 0.0;
    for (double v : field.values()) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum * field.grid().cell_area();
}

} // namespace frontsim
