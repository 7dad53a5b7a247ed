#include <doctest.h>

#include <cmath>
#include <optional>
#include <stdexcept>

#include "frontsim/kink.hpp"
#include "support/quadrature.hpp"

using namespace frontsim;
using testsupport::bistable_reaction;
using testsupport::integrate_adaptive;
using testsupport::sigmoid_profile;

TEST_SUITE_BEGIN("kink");

TEST_CASE("kink speed") {
    CHECK(kink_speed(0.5) == 0.0);
    CHECK(kink_speed(0.3) == doctest::Approx(0.2828427124746190).epsilon(1e-14));
    CHECK(kink_speed(0.0) == doctest::Approx(0.7071067811865476).epsilon(1e-14));
    CHECK_THROWS_AS(kink_speed(-0.1), std::invalid_argument);
}

// oracle-first: the closed forms must match adaptive quadrature of the
// integrand over [y, 40] (the tail beyond 40 is ~1e-18)
TEST_CASE("tail integrals against the quadrature oracle") {
    for (double a : {0.1, 0.2, 0.3, 0.4, 0.45}) {
        for (double y = -10.0; y <= 10.0; y += 0.5) {
            const double q0 = integrate_adaptive(
                [&](double z) { return bistable_reaction(sigmoid_profile(z), a); }, y, 40.0);
            const double q1 = integrate_adaptive(
                [&](double z) { return z * bistable_reaction(sigmoid_profile(z), a); }, y, 40.0);
            CHECK(std::abs(tail_integral_J0(y, a) - q0) <= 1e-9);
            CHECK(std::abs(tail_moment_J1(y, a) - q1) <= 1e-9);
        }
    }
}

TEST_CASE("tail integral limits") {
    // whole-line values and the empty tail
    CHECK(tail_integral_J0(-700.0, 0.3) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(std::abs(tail_integral_J0(700.0, 0.3)) < 1e-300);
    CHECK(tail_integral_J0(800.0, 0.3) == 0.0); // exp overflows to inf, tail is exactly empty
    CHECK(tail_moment_J1(-700.0, 0.3) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(tail_moment_J1(700.0, 0.3)) < 1e-298);
    CHECK(tail_moment_J1(800.0, 0.3) == 0.0);

    CHECK(tail_integral_J0(0.0, 0.3) == doctest::Approx(-0.025).epsilon(1e-14));
    // frozen from the quadrature oracle
    CHECK(tail_moment_J1(0.0, 0.3) == doctest::Approx(-0.11137056388801095).epsilon(1e-12));
}

TEST_CASE("junction driving force") {
    const JunctionModel flat(4.0, 4.0, 0.3);
    for (double h : {-3.0, 0.0, 2.5})
        CHECK(junction_drive_r(h, flat) == doctest::Approx(4.0 * 0.2).epsilon(1e-14));

    const JunctionModel m(4.0, 30.0, 0.3);
    CHECK(junction_drive_r(50.0, m) == doctest::Approx(4.0 * 0.2).epsilon(1e-9));
    CHECK(junction_drive_r(-50.0, m) == doctest::Approx(30.0 * 0.2).epsilon(1e-9));

    // composition identity from the tail integrals
    for (double h = -8.0; h <= 8.0; h += 0.25) {
        const double via_tails =
            m.w1 * ((0.5 - m.a) - tail_integral_J0(h, m.a)) + m.w2 * tail_integral_J0(h, m.a);
        CHECK(std::abs(junction_drive_r(h, m) - via_tails) <= 1e-12);
    }
}

TEST_CASE("junction minimum formula vs brute force") {
    for (double w2 : {20.0, 30.0}) {
        const JunctionModel m(4.0, w2, 0.3);
        double brute = 1e300, h_at = 0.0;
        for (double h = -50.0; h <= 50.0; h += 1e-3) {
            const double r = junction_drive_r(h, m);
            if (r < brute) {
                brute = r;
                h_at = h;
            }
        }
        CHECK(std::abs(brute - junction_drive_min(m)) <= 1e-6);
        // minimum sits where the profile value equals a
        CHECK(h_at == doctest::Approx(std::log((1.0 - 0.3) / 0.3)).epsilon(1e-2));
    }
    CHECK(junction_drive_min(JunctionModel(4.0, 20.0, 0.3)) == doctest::Approx(0.08).epsilon(1e-12));
    CHECK(junction_drive_min(JunctionModel(4.0, 30.0, 0.3)) == doctest::Approx(-0.37).epsilon(1e-12));
}

TEST_CASE("trapping position") {
    CHECK(!trapping_position(JunctionModel(4.0, 20.0, 0.3)));
    CHECK(!trapping_position(JunctionModel(5.0, 5.0, 0.3)));
    CHECK(!trapping_position(JunctionModel(10.0, 4.0, 0.25))); // contracting guide

    const JunctionModel m(4.0, 30.0, 0.3);
    const auto h = trapping_position(m);
    REQUIRE(h.has_value());
    CHECK(std::abs(junction_drive_r(*h, m)) <= 1e-12);
    // smallest root: r is still positive a bit to the left
    CHECK(junction_drive_r(*h - 0.5, m) > 0.0);
    CHECK(*h < std::log((1.0 - 0.3) / 0.3));

    // trapping exists iff the minimum dips below zero
    for (double w2 = 5.0; w2 <= 60.0; w2 += 2.5) {
        const JunctionModel q(4.0, w2, 0.3);
        CHECK(trapping_position(q).has_value() == (junction_drive_min(q) <= 0.0));
    }
}

TEST_CASE("cone driving force") {
    CHECK(cone_drive_r_theta(ConeModel(4.0, 1.4, 0.3)) ==
          doctest::Approx(0.5076956921256149).epsilon(1e-12));
    CHECK(cone_drive_r_theta(ConeModel(4.0, 1.4, 0.4)) ==
          doctest::Approx(-0.4461521539371928).epsilon(1e-12));
    // straight guide limit
    CHECK(cone_drive_r_theta(ConeModel(4.0, 0.0, 0.3)) ==
          doctest::Approx(4.0 * std::sqrt(2.0) * 0.2).epsilon(1e-14));

    // reconstruction from the first tail moment at x0 = 0
    for (double w : {1.0, 2.5, 4.0})
        for (double th : {0.3, 0.75, 1.4, 2.5}) {
            const ConeModel m(w, th, 0.3);
            const double via_tails =
                w * std::sqrt(2.0) * 0.2 + 4.0 * th * tail_moment_J1(0.0, 0.3);
            CHECK(std::abs(cone_drive_r_theta(m) - via_tails) <= 1e-12);
        }
}

TEST_CASE("cone threshold line") {
    CHECK(cone_threshold_slope(0.3) == doctest::Approx(0.6349135323563426).epsilon(1e-12));
    CHECK(cone_threshold_theta(2.0, 0.3) == doctest::Approx(2.0 * 0.6349135323563426).epsilon(1e-12));
    // slope collapses as a -> 1/2 (crossing only for very large w)
    CHECK(cone_threshold_slope(0.49) < 0.02);
    // for small a the wedge term stops blocking
    CHECK_THROWS_AS(cone_threshold_slope(0.12), std::domain_error);
    CHECK(kConeThresholdSlopeEmpirical == doctest::Approx(0.36));
}

TEST_CASE("n-dimensional scaling") {
    const ConeModel m2(4.0, 1.4, 0.3, 2);
    CHECK(cone_drive_ndim(m2) == doctest::Approx(cone_drive_r_theta(m2)).epsilon(1e-14));
    const ConeModel m3(4.0, 1.4, 0.3, 3);
    CHECK(cone_drive_ndim(m3) == doctest::Approx(4.0 * cone_drive_r_theta(m2)).epsilon(1e-12));

    // the root in w is independent of n
    auto root_in_w = [](int n) {
        double lo = 0.05, hi = 50.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (cone_drive_ndim(ConeModel(mid, 1.4, 0.3, n)) < 0.0 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    const double w2 = root_in_w(2);
    CHECK(root_in_w(3) == doctest::Approx(w2).epsilon(1e-9));
    CHECK(root_in_w(5) == doctest::Approx(w2).epsilon(1e-9));
}

TEST_CASE("nonlinearity rescaling") {
    CHECK(rescaled_threshold(4.0, 1.0) == 4.0);
    CHECK(rescaled_threshold(4.0, 4.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(rescaled_threshold(4.0, 0.25) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK_THROWS_AS(rescaled_threshold(4.0, 0.0), std::invalid_argument);
}

TEST_CASE("transverse mode decay") {
    CHECK(mode_decay_rate(ModeDecay(std::numbers::pi, 0.0, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    double prev = mode_decay_rate(ModeDecay(1.0, 0.7, 1));
    for (double w = 1.5; w < 12.0; w += 0.5) {
        const double rate = mode_decay_rate(ModeDecay(w, 0.7, 1));
        CHECK(rate < prev); // strictly decreasing in w
        prev = rate;
    }
    CHECK(mode_decay_rate(ModeDecay(2.0, 0.5, 2)) ==
          doctest::Approx(0.25 + std::pow(std::numbers::pi, 2)).epsilon(1e-12));
    CHECK(kTwoDimEffectsWidth == doctest::Approx(6.283185307179586).epsilon(1e-14));
}

TEST_SUITE_END();
