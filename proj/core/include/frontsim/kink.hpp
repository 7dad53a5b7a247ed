#ifndef FRONTSIM_KINK_HPP
#define FRONTSIM_KINK_HPP

#include <numbers>
#include <optional>

namespace frontsim {

/** Reduced model of a kink at a sharp junction between channels of widths
 * w1 (left) and w2 (right). */
struct JunctionModel {
    double w1, w2;
    double a;

    JunctionModel(double w1_, double w2_, double a_);
};

/** Reduced model of a channel of width w opening into a wedge of angle
 * theta, generalized to spatial dimension n (default 2). */
struct ConeModel {
    double w;
    double theta;
    double a;
    int n = 2;

    ConeModel(double w_, double theta_, double a_, int n_ = 2);
};

/** First transverse perturbation modes in a channel of width w. */
struct ModeDecay {
    double w;
    double k = 0.0; // longitudinal wavenumber
    int m = 1;      // transverse mode index

    ModeDecay(double w_, double k_ = 0.0, int m_ = 1);
};

// Traveling-front speed sqrt(1/2)*(1 - 2a); zero at a = 1/2.
double kink_speed(double a);

// Tail integral of the reaction term over the exact profile U(z) = 1/(1+e^z):
//   J0(y, a) = int_y^inf R(U(z)) dz = 1/(2(1+e^y)^2) - a/(1+e^y)
double tail_integral_J0(double y, double a);

// First moment of the same tail:
//   J1(y, a) = int_y^inf z R(U(z)) dz
//            = (1/2)[ y/(1+e^y)^2 - (1+2ay)/(1+e^y) + (2a-1)(y - log(1+e^y)) ]
double tail_moment_J1(double y, double a);

// Driving force r(h) on a kink centered at h inside the junction:
//   r(h) = w1(1/2 - a) + (w1 - w2)( a/(1+e^h) - 1/(2(1+e^h)^2) )
// The kink can get trapped where r(h) = 0.
double junction_drive_r(double h, const JunctionModel& m);

// min over h of r(h), attained where the profile value equals a:
//   w1(1/2 - a) - (w2 - w1) a^2/2
double junction_drive_min(const JunctionModel& m);

// Smallest root h* of r(h) = 0 (bisection to |r| <= 1e-12), or nullopt when
// min_h r(h) > 0 and the kink always passes.
std::optional<double> trapping_position(const JunctionModel& m);

// Driving force of a kink at the mouth of the cone (n = 2):
//   r_theta = w sqrt(2) (1/2 - a) + 2 theta [ -1/2 - (2a - 1) log 2 ]
// No crossing when r_theta <= 0.
double cone_drive_r_theta(const ConeModel& m);

// n-dimensional scaling of the same balance:
//   r_theta^n = w^{n-1} sqrt(2)(1/2 - a) + w^{n-2} 2 theta [ -1/2 - (2a-1) log 2 ]
double cone_drive_ndim(const ConeModel& m);

// Critical angle theta_c(w) solving r_theta = 0; linear in w. Throws when
// the bracket term is <= 0 (small a: the wedge term aids crossing and no
// blocking threshold exists).
double cone_threshold_theta(double w, double a);
double cone_threshold_slope(double a); // theta_c / w from the formula above

// Threshold slope observed in (w, theta) simulation scans at a = 0.3.
inline constexpr double kConeThresholdSlopeEmpirical = 0.36;

// Crossing threshold under nonlinearity scaling s: w' = w / sqrt(s).
double rescaled_threshold(double w, double s);

// Decay rate of transverse mode m: omega = k^2 + (m pi / w)^2.
double mode_decay_rate(const ModeDecay& m);

// Channel width above which 2D front effects appear.
inline constexpr double kTwoDimEffectsWidth = 2.0 * std::numbers::pi;

} // namespace frontsim

#endif
