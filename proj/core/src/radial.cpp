#include "frontsim/radial.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace frontsim {

void RadialProblem::validate() const {
    if (!(L > 0.0)) throw std::invalid_argument("RadialProblem: L must be > 0");
    if (n < 10) throw std::invalid_argument("RadialProblem: n must be >= 10");
    if (!(K > 0.0)) throw std::invalid_argument("RadialProblem: K must be > 0");
    if (u0 < 0.0 || u0 > 1.0) throw std::invalid_argument("RadialProblem: u0 must lie in [0, 1]");
    if (!(tol > 0.0)) throw std::invalid_argument("RadialProblem: tol must be > 0");
    if (max_iter < 1) throw std::invalid_argument("RadialProblem: max_iter must be >= 1");
    if (!(a > 0.0) || !(a < 1.0)) throw std::invalid_argument("RadialProblem: a must lie in (0, 1)");
}

RelaxationError::RelaxationError(int iterations_, double residual_)
    : std::runtime_error("relaxation did not converge after " + std::to_string(iterations_) +
                         " iterations (last residual " + std::to_string(residual_) + ")"),
      iterations(iterations_), residual(residual_) {}

RadialSolution relax_solve(const RadialProblem& p) {
    p.validate();

    const int n = p.n;
    const double dr = p.L / (n - 1);
    const double idr2 = 1.0 / (dr * dr);

    RadialSolution sol;
    sol.r.resize(n);
    for (int i = 0; i < n; ++i) sol.r[i] = i * dr;

    // tridiagonal rows of  -Lap_h + K I  (Lap = u_rr + u_r / r)
    std::vector<double> lo(n), di(n), up(n);
    for (int i = 1; i < n - 1; ++i) {
        const double ir = 1.0 / (2.0 * dr * sol.r[i]);
        lo[i] = -(idr2 - ir);
        di[i] = 2.0 * idr2 + p.K;
        up[i] = -(idr2 + ir);
    }
    // r = L: Neumann via mirrored ghost point (the u_r/r term drops out)
    lo[n - 1] = -2.0 * idr2;
    di[n - 1] = 2.0 * idr2 + p.K;
    up[n - 1] = 0.0;
    if (p.pin_origin) {
        di[0] = 1.0;
        up[0] = 0.0;
    } else {
        // at r = 0 the radial Laplacian limits to 2 u_rr; mirrored ghost
        di[0] = 4.0 * idr2 + p.K;
        up[0] = -4.0 * idr2;
    }

    std::vector<double> u(n, 0.0), rhs(n), cp(n), dp(n), next(n);
    if (p.pin_origin) u[0] = p.u0;
    sol.iterate_min = *std::min_element(u.begin(), u.end());
    sol.iterate_max = *std::max_element(u.begin(), u.end());

    double res = 0.0;
    for (int it = 1; it <= p.max_iter; ++it) {
        for (int i = 0; i < n; ++i) rhs[i] = p.K * u[i] + u[i] * (1.0 - u[i]) * (u[i] - p.a);
        if (p.pin_origin) rhs[0] = p.u0;

        // Thomas algorithm
        cp[0] = up[0] / di[0];
        dp[0] = rhs[0] / di[0];
        for (int i = 1; i < n; ++i) {
            const double m = di[i] - lo[i] * cp[i - 1];
            cp[i] = up[i] / m;
            dp[i] = (rhs[i] - lo[i] * dp[i - 1]) / m;
        }
        next[n - 1] = dp[n - 1];
        for (int i = n - 2; i >= 0; --i) next[i] = dp[i] - cp[i] * next[i + 1];

        res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::abs(next[i] - u[i]));
        u.swap(next);
        sol.iterate_min = std::min(sol.iterate_min, *std::min_element(u.begin(), u.end()));
        sol.iterate_max = std::max(sol.iterate_max, *std::max_element(u.begin(), u.end()));
        sol.iterations = it;
        sol.residual = res;
        if (res <= p.tol) {
            sol.u = std::move(u);
            return sol;
        }
    }
    throw RelaxationError(p.max_iter, res);
}

double compare_to_kink(const RadialSolution& sol, double center, double width, double r_min) {
    double worst = 0.0;
    for (std::size_t i = 0; i < sol.r.size(); ++i) {
        if (sol.r[i] < r_min) continue;
        const double kink = 1.0 / (1.0 + std::exp((sol.r[i] - center) / width));
        worst = std::max(worst, std::abs(sol.u[i] - kink));
    }
    return worst;
}

void write_profile_csv(std::ostream& os, const RadialSolution& sol) {
    os.precision(17);
    os << "r,u\n";
    for (std::size_t i = 0; i < sol.r.size(); ++i) os << sol.r[i] << ',' << sol.u[i] << '\n';
}

} // namespace frontsim
