#ifndef FRONTSIM_FIELD_HPP
#define FRONTSIM_FIELD_HPP

#include <cmath>
#include <cstddef>
#include <vector>

namespace frontsim {

/** Uniform rectangular grid of cell centers.
 *
 * Cell (i,j) has its center at (x0 + i*dx, y0 + j*dy). Storage convention
 * throughout is row-major with i fastest: index = j*nx + i. */
struct GridSpec {
    int nx = 0, ny = 0;
    double dx = 0.0, dy = 0.0;
    double x0 = 0.0, y0 = 0.0;

    GridSpec() = default;
    GridSpec(int nx_, int ny_, double dx_, double dy_, double x0_ = 0.0, double y0_ = 0.0);

    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double x(int i) const { return x0 + i * dx; }
    double y(int j) const { return y0 + j * dy; }
    double cell_area() const { return dx * dy; }
    double area() const { return nx * dx * ny * dy; }
    // transverse midpoint of the cell-center range
    double center_y() const { return y0 + 0.5 * (ny - 1) * dy; }
    double x_min() const { return x0; }
    double x_max() const { return x0 + (nx - 1) * dx; }
    double y_min() const { return y0; }
    double y_max() const { return y0 + (ny - 1) * dy; }

    bool operator==(const GridSpec&) const = default;
};

/** Scalar unknown sampled at cell centers. Values are finite by invariant;
 * supports in-place update by a single writer. */
class ScalarField {
  public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& grid) : grid_(grid), values_(grid.size(), 0.0) {}
    ScalarField(const GridSpec& grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }
    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
    double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }
    const double* data() const { return values_.data(); }
    double* data() { return values_.data(); }
    std::size_t size() const { return values_.size(); }

  private:
    GridSpec grid_;
    std::vector<double> values_;
};

/** Diffusion coefficient b(x,y) on the same grid layout as ScalarField.
 * Values lie in (0,1]; obstacles are regions of very small b. */
class DiffusionMap {
  public:
    DiffusionMap() = default;
    DiffusionMap(const GridSpec& grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
    const double* data() const { return values_.data(); }

  private:
    GridSpec grid_;
    std::vector<double> values_;
};

/** Parameters of the bistable cubic R(u) = s*u*(1-u)*(u-a). */
struct BistableParams {
    double a = 0.3;
    double s = 1.0;

    BistableParams() = default;
    BistableParams(double a_, double s_ = 1.0);
};

// Pointwise reaction term s*u*(1-u)*(u-a). Roots at 0, a, 1; negative on
// (0,a), positive on (a,1).
inline double reaction(double u, const BistableParams& p) {
    return p.s * u * (1.0 - u) * (u - p.a);
}

/** Exact 1D front profile u = 1/(1 + exp(sqrt(1/2)*(x - center_x))),
 * independent of y. Requires s == 1; scaled problems are handled by
 * shrinking geometry instead. */
ScalarField front_profile(const GridSpec& grid, double center_x, const BistableParams& p);

/** Midpoint-rule quadrature: sum(values) * dx * dy (compensated summation). */
double integrate(const ScalarField& field);

} // namespace frontsim

#endif
