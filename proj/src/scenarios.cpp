// Built-in planar scenarios.
#include <cmath>

#include "toroid/locomotion_sim.hpp"

namespace toroid::sim::scenarios {

// Maze laid out like the demonstration course, in metres, seen from above.
// The robot starts at the left angled slightly down, runs into the lower
// panel, is turned up a ramp onto the upper panel, follows it and finally
// squeezes through a gap in an end panel to reach the exit chamber.
//
//   y=0.25  +-------------------------------------+--------------+
//           |   start                             |              |
//           |    \                                  gap    goal  |
//           |     \                 __________....+              |
//   y=-0.30 +----------------------/                             |
//           x=0                x=1.2  x=1.6     x=2.4          x=3.0
PlanarScenario maze(double aperture_width) {
    constexpr double kTop = 0.25;
    constexpr double kFloor = 0.0;
    constexpr double kBottom = -0.30;
    constexpr double kPanelX = 2.40;
    constexpr double kExitX = 3.00;
    constexpr double kGapCentre = 0.17;

    const double gap_top = kGapCentre + aperture_width / 2.0;
    const double gap_bottom = kGapCentre - aperture_width / 2.0;

    PlanarScenario s;
    s.walls = {
        {{0.0, kBottom}, {1.20, kBottom}},        // 0 lower panel
        {{1.20, kBottom}, {1.60, kFloor}},        // 1 ramp
        {{0.0, kTop}, {kPanelX, kTop}},           // 2 upper panel
        {{1.60, kFloor}, {kPanelX, kFloor}},      // 3 raised floor
        {{kPanelX, kTop}, {kPanelX, gap_top}},    // 4 end panel, upper jaw
        {{kPanelX, gap_bottom}, {kPanelX, kFloor}},  // 5 end panel, lower jaw
        {{kPanelX, kTop}, {kExitX, kTop}},        // 6 exit chamber
        {{kPanelX, kFloor}, {kExitX, kFloor}},    // 7
        {{kExitX, kFloor}, {kExitX, kTop}},       // 8 back wall
    };
    const double angle = -20.0 * 3.14159265358979323846 / 180.0;
    s.start.position = {0.15, 0.05};
    s.start.heading = {std::cos(angle), std::sin(angle)};
    s.robot_body_length = 0.45;
    s.membrane_diameter = 0.137;
    s.device_diameter = 0.104;
    s.tip_speed = kDefaultTipSpeed;
    s.goal_region = {{2.70, kFloor}, {kExitX, kFloor}, {kExitX, kTop}, {2.70, kTop}};
    s.max_sim_time = 120.0;
    s.dt = kDefaultDt;
    return s;
}

PlanarScenario corridor(double width, double length) {
    const double half = width / 2.0;
    PlanarScenario s;
    s.walls = {
        {{0.0, -half}, {length, -half}},
        {{0.0, half}, {length, half}},
    };
    s.start.position = {0.05, 0.0};
    s.start.heading = {1.0, 0.0};
    s.robot_body_length = 0.45;
    s.membrane_diameter = 0.137;
    s.device_diameter = 0.104;
    s.goal_region = {{length - 0.15, -half}, {length, -half}, {length, half}, {length - 0.15, half}};
    s.max_sim_time = 2.0 * length / s.tip_speed;
    return s;
}

}  // namespace toroid::sim::scenarios
