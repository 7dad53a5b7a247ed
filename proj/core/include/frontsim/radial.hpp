#ifndef FRONTSIM_RADIAL_HPP
#define FRONTSIM_RADIAL_HPP

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace frontsim {

/** Radially symmetric static problem Delta u + R(u) = 0 on [0, L], solved by
 * the relaxation scheme
 *
 *     -Delta u^{k+1} + K u^{k+1} = K u^k + R(u^k)
 *
 * with u(0) = u0 pinned (or homogeneous Neumann at the origin when
 * pin_origin is false) and homogeneous Neumann at r = L. */
struct RadialProblem {
    double L = 10.0;
    int n = 400;
    double a = 0.3;
    double K = 2.0;
    double u0 = 1.0;
    bool pin_origin = true;
    int max_iter = 500;
    double tol = 1e-9; // max-norm Cauchy residual

    void validate() const;
};

struct RadialSolution {
    std::vector<double> r;
    std::vector<double> u;
    int iterations = 0;
    double residual = 0.0;
    // iterate range over the whole iteration history
    double iterate_min = 0.0;
    double iterate_max = 0.0;
};

class RelaxationError : public std::runtime_error {
  public:
    RelaxationError(int iterations, double residual);
    int iterations;
    double residual;
};

// Runs the relaxation from the zero field (plus the pin); throws
// RelaxationError when the Cauchy residual has not reached tol by max_iter.
RadialSolution relax_solve(const RadialProblem& p);

// Largest |u(r) - 1/(1 + exp((r - center)/width))| over r in [r_min, L].
// r_min excludes the discrete boundary layer of the point pin when needed.
double compare_to_kink(const RadialSolution& sol, double center, double width,
                       double r_min = 0.0);

// Two-column CSV "r,u".
void write_profile_csv(std::ostream& os, const RadialSolution& sol);

} // namespace frontsim

#endif
