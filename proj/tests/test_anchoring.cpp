#include <doctest.h>

#include <cmath>

#include "toroid/anchoring.hpp"

using namespace toroid;
using namespace toroid::anchoring;

namespace {

PipeEnvironment vertical_at(double pressure) {
    auto env = presets::reference_pipe();
    env.pressure_P = pressure;
    return env;
}

}  // namespace

TEST_CASE("available friction in a vertical pipe") {
    const auto robot = presets::reference_robot();
    CHECK(available_friction(vertical_at(0.0), robot) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(available_friction(vertical_at(3450.0), robot) == doctest::Approx(78.7).epsilon(1e-3));
    CHECK(available_friction(vertical_at(6900.0), robot) ==
          doctest::Approx(2 * available_friction(vertical_at(3450.0), robot)).epsilon(1e-12));
}

TEST_CASE("friction grows with the perpendicular weight component") {
    const auto robot = presets::reference_robot();
    auto env = vertical_at(1000.0);
    double previous = 1e300;
    for (double deg = 0.0; deg <= 90.0; deg += 15.0) {
        env.angle_theta = units::degrees_to_radians(deg);
        const double f = available_friction(env, robot);
        CHECK(f <= previous);
        previous = f;
    }
}

TEST_CASE("membrane must press on the pipe") {
    auto robot = presets::reference_robot();
    robot.membrane.inflated_outer_diameter = 0.12;
    CHECK_THROWS_WITH_AS(available_friction(presets::reference_pipe(), robot),
                         doctest::Contains("membrane does not press against pipe"), DomainError);
}

TEST_CASE("maximum vertical weight") {
    CHECK(max_vertical_weight(vertical_at(3450.0)) == doctest::Approx(78.7).epsilon(1e-3));
    CHECK(max_vertical_weight(vertical_at(0.0)) == 0.0);
    CHECK(max_vertical_weight(vertical_at(700.0)) == doctest::Approx(16.0).epsilon(3e-3));
    auto tilted = vertical_at(3450.0);
    tilted.angle_theta = 0.2;
    CHECK(max_vertical_weight(tilted) == max_vertical_weight(vertical_at(3450.0)));
}

TEST_CASE("minimum pressure for the robot with battery") {
    const auto env = presets::reference_pipe();
    CHECK(min_pressure_for_no_slip(6.46, env) == doctest::Approx(283.0).epsilon(2e-3));
    CHECK(min_pressure_for_no_slip(0.0, env) == 0.0);
    const double w = presets::reference_robot().with_battery().total_weight();
    const double p = min_pressure_for_no_slip(w, env);
    CHECK(std::abs(max_vertical_weight(vertical_at(p)) - w) <= 1e-9);

    auto frictionless = env;
    frictionless.mu_static = 0.0;
    CHECK_THROWS_AS(min_pressure_for_no_slip(1.0, frictionless), DomainError);
}

TEST_CASE("slip assessment") {
    const auto robot = presets::reference_robot().with_battery();
    const auto env = presets::reference_pipe();

    const auto boundary = assess_slip(robot, vertical_at(min_pressure_for_no_slip(robot.total_weight(), env)));
    CHECK(std::abs(boundary.margin) <= 1e-9);

    const auto bare = presets::reference_robot();
    const auto held = assess_slip(bare, vertical_at(3450.0));
    CHECK_FALSE(held.slips);
    CHECK(held.margin == doctest::Approx(78.7 - 4.364).epsilon(1e-3));
    CHECK(held.margin == doctest::Approx(held.available_friction - std::abs(held.required_friction_Fp)));

    auto level = vertical_at(0.0);
    level.angle_theta = 0.0;
    const auto flat = assess_slip(bare, level);
    CHECK(flat.required_friction_Fp == 0.0);
    CHECK_FALSE(flat.slips);

    const auto low = assess_slip(bare, vertical_at(50.0));
    CHECK(low.slips);
}

TEST_CASE("a tie holds") {
    // Level, frictionless, unpressurized: nothing required, nothing available.
    auto env = vertical_at(0.0);
    env.angle_theta = 0.0;
    env.mu_static = 0.0;
    const auto s = assess_slip(presets::reference_robot(), env);
    CHECK(s.margin == 0.0);
    CHECK_FALSE(s.slips);
}

TEST_CASE("burst limit is a warning threshold") {
    CHECK_FALSE(exceeds_burst_limit(vertical_at(3450.0)));
    CHECK(exceeds_burst_limit(vertical_at(12000.0)));
}
