// Planar quasistatic locomotion of an everting toroidal robot.
//
// The body is a centerline polyline with a width per point. The tip advances
// by eversion along its heading; skin that has been laid down never moves
// again until the tail inverts it back in. Walls are line segments. Contact
// is purely kinematic:
//
//  * the membrane front (a disc of the inflated radius) slides along a wall
//    it runs into: the heading is projected onto the wall tangent;
//  * where no heading lets the full-width body fit, the tip centres itself in
//    the gap and the local width shrinks to the gap, down to the rigid
//    device diameter;
//  * narrower than the device, the tip cannot advance.
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toroid/geometry.hpp"

namespace toroid::sim {

using geom::Segment;
using geom::Vec2;

inline constexpr double kPenetrationTolerance = 1e-4;  // m
inline constexpr double kDefaultDt = 0.01;              // s
inline constexpr double kDefaultTipSpeed = 0.061;       // m/s
inline constexpr int kStuckSteps = 50;
inline constexpr double kStuckAdvanceFraction = 0.1;

struct Pose {
    Vec2 position;
    Vec2 heading{1.0, 0.0};

    friend bool operator==(const Pose&, const Pose&) = default;
};

struct PlanarScenario {
    std::vector<Segment> walls;
    Pose start;
    double robot_body_length = 0.45;  // m
    double membrane_diameter = 0.137;
    double device_diameter = 0.104;
    double tip_speed = kDefaultTipSpeed;
    std::vector<Vec2> goal_region;  // convex; empty means no goal
    double max_sim_time = 120.0;    // s
    double dt = kDefaultDt;

    friend bool operator==(const PlanarScenario&, const PlanarScenario&) = default;
};

/// Throws DomainError on an invalid scenario.
void validate(const PlanarScenario& scenario);

enum class EventKind { ContactBegin, Deflection, SqueezeBegin, SqueezeEnd, GoalReached, Stuck };

std::string_view to_string(EventKind kind);

struct Event {
    EventKind kind{};
    std::size_t step = 0;  // index of the step that produced it (1-based)
    double time = 0.0;
    int wall = -1;         // wall involved, if any
    double value = 0.0;    // heading change (rad) or local width (m)

    friend bool operator==(const Event&, const Event&) = default;
};

struct BodyPoint {
    std::uint64_t id = 0;
    Vec2 position;
    double width = 0.0;
};

struct Contact {
    std::uint64_t point_id = 0;
    std::size_t wall = 0;

    friend bool operator==(const Contact&, const Contact&) = default;
};

struct SimState {
    std::deque<BodyPoint> centerline;  // tail first, tip last
    Vec2 tip_heading{1.0, 0.0};
    std::vector<Contact> contacts;     // walls touching the tip
    double elapsed = 0.0;
    std::size_t steps = 0;
    std::vector<Event> event_log;

    bool squeezing = false;
    int slow_steps = 0;
    bool stuck = false;
    bool goal_reached = false;
    double arc_length = 0.0;  // running sum, see centerline_length()
    std::uint64_t next_id = 0;

    const BodyPoint& tip() const { return centerline.back(); }
};

enum class Outcome { GoalReached, Stuck, Timeout };

std::string_view to_string(Outcome outcome);

struct RunResult {
    SimState final_state;
    Outcome outcome = Outcome::Timeout;
};

/// Straight body laid out behind the start pose at full membrane width.
SimState initial_state(const PlanarScenario& scenario);

/// Advances the state in place by one step of duration dt.
void advance(const PlanarScenario& scenario, SimState& state, double dt);

/// Pure form of advance().
SimState step(const PlanarScenario& scenario, const SimState& state, double dt);

/// Called after every step with the events that step produced.
using StepObserver = std::function<void(const SimState&, std::size_t first_new_event)>;

/// Steps at scenario.dt until the tip enters the goal, the robot gets stuck,
/// or max_sim_time elapses.
RunResult run(const PlanarScenario& scenario, const StepObserver& observer = {});

/// Steps exactly n times at dt regardless of goal or stuck status.
SimState run_steps(const PlanarScenario& scenario, double dt, std::size_t n);

/// Distance from p to the nearest wall (infinity with no walls).
double clearance(const PlanarScenario& scenario, Vec2 p);

/// Recomputed arc length of the centerline polyline.
double centerline_length(const SimState& state);

std::size_t count_events(const SimState& state, EventKind kind);

enum class ApertureVerdict { PassFree, PassSqueeze, Blocked };

std::string_view to_string(ApertureVerdict verdict);

ApertureVerdict aperture_check(double aperture_width, double membrane_diameter, double device_diameter);

/// Time to evert through a pipe of the given length at constant tip speed.
double pipe_climb_time(double pipe_length, double tip_speed);

namespace scenarios {

/// Zigzag maze ending in an aperture of the given width.
PlanarScenario maze(double aperture_width = 0.11);

/// Straight corridor of the given width with the goal at its far end.
PlanarScenario corridor(double width, double length = 1.5);

}  // namespace scenarios

}  // namespace toroid::sim
