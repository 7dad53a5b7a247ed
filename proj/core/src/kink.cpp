#include "frontsim/kink.hpp"

#include <cmath>
#include <stdexcept>

namespace frontsim {

namespace {

constexpr double kLog2 = 0.693147180559945309417232121458;

void check_a(double a) {
    if (!(a > 0.0) || !(a < 1.0)) throw std::invalid_argument("a must lie in (0, 1)");
}

// y - log(1 + e^y), evaluated without overflow on either tail
double log_sigmoid(double y) {
    if (y >= 0.0) return -std::log1p(std::exp(-y));
    return y - std::log1p(std::exp(y));
}

} // namespace

JunctionModel::JunctionModel(double w1_, double w2_, double a_) : w1(w1_), w2(w2_), a(a_) {
    if (!(w1 > 0.0) || !(w2 > 0.0)) throw std::invalid_argument("JunctionModel: widths must be > 0");
    if (!(a > 0.0) || !(a < 0.5)) throw std::invalid_argument("JunctionModel: a must lie in (0, 1/2)");
}

ConeModel::ConeModel(double w_, double theta_, double a_, int n_) : w(w_), theta(theta_), a(a_), n(n_) {
    if (!(w > 0.0)) throw std::invalid_argument("ConeModel: w must be > 0");
    if (!(theta >= 0.0) || theta > std::numbers::pi)
        throw std::invalid_argument("ConeModel: theta must lie in [0, pi]");
    check_a(a);
    if (n < 2) throw std::invalid_argument("ConeModel: n must be >= 2");
}

ModeDecay::ModeDecay(double w_, double k_, int m_) : w(w_), k(k_), m(m_) {
    if (!(w > 0.0)) throw std::invalid_argument("ModeDecay: w must be > 0");
    if (m < 1) throw std::invalid_argument("ModeDecay: m must be >= 1");
}

double kink_speed(double a) {
    if (!(a >= 0.0) || !(a <= 1.0)) throw std::invalid_argument("kink_speed: a must lie in [0, 1]");
    return std::sqrt(0.5) * (1.0 - 2.0 * a);
}

double tail_integral_J0(double y, double a) {
    const double sig = 1.0 / (1.0 + std::exp(y)); // exp overflow -> sig = 0, correct limit
    return 0.5 * sig * sig - a * sig;
}

double tail_moment_J1(double y, double a) {
    const double sig = 1.0 / (1.0 + std::exp(y));
    return 0.5 * (y * sig * sig - (1.0 + 2.0 * a * y) * sig + (2.0 * a - 1.0) * log_sigmoid(y));
}

double junction_drive_r(double h, const JunctionModel& m) {
    const double sig = 1.0 / (1.0 + std::exp(h));
    return m.w1 * (0.5 - m.a) + (m.w1 - m.w2) * (m.a * sig - 0.5 * sig * sig);
}

double junction_drive_min(const JunctionModel& m) {
    return m.w1 * (0.5 - m.a) - (m.w2 - m.w1) * 0.5 * m.a * m.a;
}

std::optional<double> trapping_position(const JunctionModel& m) {
    if (junction_drive_min(m) > 0.0) return std::nullopt;
    // r decreases from w2(1/2 - a) > 0 down to its minimum at h_min (where
    // the profile value equals a), so the smallest root lies in [-50, h_min]
    const double h_min = std::log((1.0 - m.a) / m.a);
    double lo = -50.0, hi = h_min;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double r = junction_drive_r(mid, m);
        if (std::abs(r) <= 1e-12) return mid;
        (r > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double cone_drive_r_theta(const ConeModel& m) {
    if (m.n != 2) throw std::invalid_argument("cone_drive_r_theta: defined for n == 2");
    return m.w * std::sqrt(2.0) * (0.5 - m.a) + 2.0 * m.theta * (-0.5 - (2.0 * m.a - 1.0) * kLog2);
}

double cone_drive_ndim(const ConeModel& m) {
    const double straight = std::pow(m.w, m.n - 1) * std::sqrt(2.0) * (0.5 - m.a);
    const double wedge = std::pow(m.w, m.n - 2) * 2.0 * m.theta * (-0.5 - (2.0 * m.a - 1.0) * kLog2);
    return straight + wedge;
}

double cone_threshold_slope(double a) {
    if (!(a > 0.0) || !(a < 0.5)) throw std::invalid_argument("cone_threshold_slope: a must lie in (0, 1/2)");
    const double denom = 2.0 * (0.5 + (2.0 * a - 1.0) * kLog2);
    if (denom <= 0.0)
        throw std::domain_error("cone_threshold_slope: wedge term is not blocking for this a");
    return std::sqrt(2.0) * (0.5 - a) / denom;
}

double cone_threshold_theta(double w, double a) {
    if (!(w > 0.0)) throw std::invalid_argument("cone_threshold_theta: w must be > 0");
    return w * cone_threshold_slope(a);
}

double rescaled_threshold(double w, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("rescaled_threshold: s must be > 0");
    return w / std::sqrt(s);
}

double mode_decay_rate(const ModeDecay& m) {
    const double q = m.m * std::numbers::pi / m.w;
    return m.k * m.k + q * q;
}

} // namespace frontsim
