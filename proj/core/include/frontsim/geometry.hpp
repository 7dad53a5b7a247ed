#ifndef FRONTSIM_GEOMETRY_HPP
#define FRONTSIM_GEOMETRY_HPP

#include <string>

#include "frontsim/field.hpp"

namespace frontsim {

enum class ScenarioKind {
    UniformGuide,
    Junction,
    Cone,
    ParallelGuides,
    Hole,
    Checkerboard,
};

const char* to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& name);

/** Declarative description of one obstacle geometry plus physical
 * parameters. Only the members used by `kind` are meaningful:
 *
 *   UniformGuide   w                 straight channel of width w
 *   Junction       w1, w2            sharp width change at x = 0
 *   Cone           w, theta          channel of width w opening at x = 0 into
 *                                    a wedge; theta is the angle between the
 *                                    channel wall and each wedge edge
 *   ParallelGuides w, d              two channels of width w at center-to-center
 *                                    separation d, cavity for x >= 0
 *   Hole           radius            disc obstacle centered on the channel
 *                                    centerline at mid-domain
 *   Checkerboard   w1, wb            one row of square blocks of side wb - w1
 *                                    at pitch wb, starting at x = L/2, gaps of
 *                                    width w1 tiled across the full height
 *
 * Channels are centered on the transverse midline of `domain`. */
struct Scenario {
    ScenarioKind kind = ScenarioKind::UniformGuide;

    double w = 0.0;
    double w1 = 0.0, w2 = 0.0;
    double theta = 0.0;
    double d = 0.0;
    double radius = 0.0;
    double wb = 0.0;

    GridSpec domain;
    double a = 0.3;
    double s = 1.0;
    double b_inside = 1e-5;
    double front_x0 = 0.0;
    double t_end = 200.0;
    double dt = 1e-3;

    // factories with desk-scale default domains (dx = dy = 0.1)
    static Scenario uniform_guide(double w);
    static Scenario junction(double w1, double w2);
    static Scenario cone(double w, double theta);
    static Scenario parallel_guides(double w, double d);
    static Scenario hole(double radius);
    static Scenario checkerboard(double w1, double wb);

    double center_y() const { return domain.center_y(); }
    // x position of the hole center / start of the checkerboard defect
    double obstacle_start_x() const;

    // throws std::invalid_argument on any violated invariant
    void validate() const;
};

/** Rasterize the scenario obstacles into a DiffusionMap: value 1 at cell
 * centers in the accessible region, b_inside at cell centers inside
 * obstacles. Rejects channels narrower than 3 cells. */
DiffusionMap rasterize(const Scenario& s);

/** x coordinate of the downstream end of the obstacle/transition region.
 * Not defined for UniformGuide. */
double obstacle_exit_x(const Scenario& s);

} // namespace frontsim

#endif
