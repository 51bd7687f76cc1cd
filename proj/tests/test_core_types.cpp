#include <doctest.h>

#include <cmath>

#include "toroid/core_types.hpp"

using namespace toroid;

TEST_CASE("validate accepts the preset robot and pipe unchanged") {
    const auto robot = presets::reference_robot();
    const auto pipe = presets::reference_pipe();
    const auto [r, e] = validate(robot, pipe);
    CHECK(r == robot);
    CHECK(e == pipe);
    const auto [r2, e2] = validate(r, e);
    CHECK(r2 == r);
    CHECK(e2 == e);
}

TEST_CASE("validate names the violated invariant") {
    auto robot = presets::reference_robot();
    robot.device.roller_radius_r = 0.0;
    CHECK_THROWS_WITH_AS(validate(robot), doctest::Contains("roller_radius_r must be positive"), DomainError);

    auto pipe = presets::reference_pipe();
    pipe.mu_static = -0.1;
    CHECK_THROWS_WITH_AS(validate(pipe), doctest::Contains("mu_static must be nonnegative"), DomainError);

    pipe = presets::reference_pipe();
    pipe.angle_theta = units::kPi;
    CHECK_THROWS_WITH_AS(validate(pipe), doctest::Contains("angle out of domain"), DomainError);

    robot = presets::reference_robot();
    robot.membrane.weight_Wm = 0.0;
    robot.device.weight_Wd = 0.0;
    CHECK_THROWS_AS(validate(robot), DomainError);

    robot = presets::reference_robot();
    robot.membrane.eversion_force_Fe = -1.0;
    CHECK_THROWS_AS(validate(robot), DomainError);
}

TEST_CASE("angle bounds are inclusive") {
    CHECK_NOTHROW(check_angle(units::kPi / 2));
    CHECK_NOTHROW(check_angle(-units::kPi / 2));
    CHECK_THROWS_AS(check_angle(units::kPi / 2 + 1e-6), DomainError);
}

TEST_CASE("unit constructors land on SI within 1e-12 relative") {
    CHECK(units::grams_to_newtons(85.0) == doctest::Approx(0.085 * 9.80665).epsilon(1e-12));
    CHECK(units::kg_cm_to_newton_metres(25.0) == doctest::Approx(2.4516625).epsilon(1e-12));
    CHECK(units::degrees_to_radians(90.0) == doctest::Approx(std::acos(0.0)).epsilon(1e-12));
    CHECK(units::radians_to_degrees(units::degrees_to_radians(37.5)) == doctest::Approx(37.5).epsilon(1e-12));
    CHECK(units::kpa_to_pa(3.45) == doctest::Approx(3450.0).epsilon(1e-12));
}

TEST_CASE("battery weight only counts when folded in") {
    const auto robot = presets::reference_robot();
    CHECK(robot.total_weight() == doctest::Approx(units::grams_to_newtons(445.0)));
    const auto loaded = robot.with_battery();
    CHECK(loaded.total_weight() == doctest::Approx(units::grams_to_newtons(659.0)));
    CHECK(loaded.device.battery_weight == 0.0);
}

TEST_CASE("contact length is the shorter of membrane and pipe") {
    CHECK(contact_length(0.5, 0.305) == 0.305);
    CHECK(contact_length(0.2, 0.305) == 0.2);
}
