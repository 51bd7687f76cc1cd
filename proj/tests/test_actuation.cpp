#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "toroid/actuation.hpp"
#include "toroid/harness.hpp"
#include "toroid/statics.hpp"

using namespace toroid;
using namespace toroid::actuation;

TEST_CASE("stall voltage from device force") {
    auto p = presets::reference_robot();
    CHECK(volts_per_newton(p) == doctest::Approx(0.017 * 7.5 / (2 * 1.53)).epsilon(1e-12));
    CHECK(voltage_for_device_force(p, 20.0) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(voltage_for_device_force(p, -p.device.loss_force_Fl) == 0.0);

    p.device.loss_force_Fl = 58.3 - 20.0;
    CHECK(voltage_for_device_force(p, 20.0) == doctest::Approx(2.43).epsilon(1e-3));
}

TEST_CASE("roller torque and operating point") {
    CHECK(roller_torque(20.0, 40.0, 0.017) == doctest::Approx(0.51));
    const auto p = presets::reference_robot();
    const auto op = operating_point(p, 20.0);
    CHECK(op.voltage_V == doctest::Approx(2.5));
    CHECK(op.torque_tau_per_roller == doctest::Approx(0.51));
    CHECK(op.current_I == doctest::Approx(0.51 / 1.53));
    CHECK(op.voltage_V == doctest::Approx(op.current_I * 7.5));
}

TEST_CASE("vertical climb adds the weight term") {
    auto p = presets::reference_robot();
    p.membrane.weight_Wm = 1.0;
    p.device.weight_Wd = 3.4;
    p.device.loss_force_Fl = 58.3 - 20.0;
    const double v0 = voltage_for_angle(p, 0.0);
    CHECK(voltage_for_angle(p, units::kPi / 2) - v0 == doctest::Approx(0.18333).epsilon(1e-4));
    for (double deg : {10.0, 35.0, 90.0}) {
        const double t = units::degrees_to_radians(deg);
        CHECK(voltage_for_angle(p, t) + voltage_for_angle(p, -t) == doctest::Approx(2 * v0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(voltage_for_angle(p, 1.6), DomainError);
}

TEST_CASE("calibration") {
    CHECK(calibrate_lumped_losses(2.43, 0.017, 7.5, 1.53) == doctest::Approx(58.32).epsilon(1e-12));
    CHECK(calibrate_lumped_losses(0.0, 0.017, 7.5, 1.53) == 0.0);
    CHECK_THROWS_AS(calibrate_lumped_losses(2.43, 0.0, 7.5, 1.53), DomainError);

    const auto p = presets::reference_robot();
    const double v = voltage_for_angle(p, 0.0);
    const auto& d = p.device;
    CHECK(calibrate_lumped_losses(v, d.roller_radius_r, d.motor_resistance_R, d.torque_constant_Ktau) ==
          doctest::Approx(p.lumped_losses()).epsilon(1e-12));
}

TEST_CASE("motor constants from ratings") {
    const auto a = motor_constants_from_ratings(12.0, 1.6, units::kg_cm_to_newton_metres(25.0));
    CHECK(a.resistance_R == doctest::Approx(7.5).epsilon(1e-15));
    CHECK(a.torque_constant_Ktau == doctest::Approx(1.5322890625).epsilon(1e-12));
    const auto b = motor_constants_from_ratings(1.0, 1.0, 1.0);
    CHECK(b.resistance_R == 1.0);
    CHECK(b.torque_constant_Ktau == 1.0);
    const auto c = motor_constants_from_ratings(12.0, 2.4, 2.4);
    CHECK(c.resistance_R == doctest::Approx(5.0));
    CHECK(c.torque_constant_Ktau == doctest::Approx(1.0));
    CHECK_THROWS_AS(motor_constants_from_ratings(12.0, 0.0, 1.0), DomainError);
}

TEST_CASE("voltage composes statics and the motor model") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const auto p = testing::random_robot(rng);
        const double t = testing::random_angle(rng);
        const double direct = voltage_for_angle(p, t);
        const double composed = voltage_for_device_force(p, statics::solve_climb_forces(p, t).device_force_Fd);
        REQUIRE(direct == doctest::Approx(composed).epsilon(1e-12));
    }
}

TEST_CASE("voltage is affine in sin(theta)") {
    const auto p = presets::reference_robot();
    std::vector<double> s;
    std::vector<double> v;
    for (double deg = -90.0; deg <= 90.0; deg += 7.5) {
        const double t = units::degrees_to_radians(deg);
        s.push_back(std::sin(t));
        v.push_back(voltage_for_angle(p, t));
    }
    const auto fit = harness::fit_line(s, v);
    const double k = volts_per_newton(p);
    CHECK(std::abs(fit.slope - k * p.total_weight()) <= 1e-9);
    CHECK(std::abs(fit.intercept - k * p.lumped_losses()) <= 1e-9);
}

TEST_CASE("scaling r and Ktau together leaves V unchanged") {
    const auto p = presets::reference_robot();
    auto q = p;
    q.device.roller_radius_r *= 3.0;
    q.device.torque_constant_Ktau *= 3.0;
    for (double deg : {-60.0, 0.0, 45.0}) {
        const double t = units::degrees_to_radians(deg);
        CHECK(voltage_for_angle(q, t) == doctest::Approx(voltage_for_angle(p, t)).epsilon(1e-12));
    }
}
