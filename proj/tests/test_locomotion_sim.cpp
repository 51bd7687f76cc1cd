#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <map>

#include "toroid/core_types.hpp"
#include "toroid/locomotion_sim.hpp"

using namespace toroid;
using namespace toroid::sim;

namespace {

PlanarScenario open_space() {
    PlanarScenario s;
    s.start = {{0.0, 0.0}, {1.0, 0.0}};
    s.max_sim_time = 10.0;
    return s;
}

// Corridor of width `wide` pinched to `narrow` between x = 1.0 and x = 1.5.
PlanarScenario pinched_corridor(double wide, double narrow) {
    const double h = wide / 2.0;
    const double n = narrow / 2.0;
    PlanarScenario s;
    for (const double side : {-1.0, 1.0}) {
        s.walls.push_back({{0.0, side * h}, {1.0, side * h}});
        s.walls.push_back({{1.0, side * h}, {1.0, side * n}});
        s.walls.push_back({{1.0, side * n}, {1.5, side * n}});
        s.walls.push_back({{1.5, side * n}, {1.5, side * h}});
        s.walls.push_back({{1.5, side * h}, {2.5, side * h}});
    }
    s.start = {{0.05, 0.0}, {1.0, 0.0}};
    s.goal_region = {{2.3, -h}, {2.5, -h}, {2.5, h}, {2.3, h}};
    s.max_sim_time = 60.0;
    return s;
}

}  // namespace

TEST_CASE("free space: straight advance") {
    const auto s = open_space();
    const auto state = run_steps(s, 0.01, 10);
    CHECK(state.tip().position.x == doctest::Approx(10 * s.tip_speed * 0.01).epsilon(1e-12));
    CHECK(state.tip().position.y == 0.0);
    CHECK(state.tip_heading == Vec2{1.0, 0.0});
    CHECK(count_events(state, EventKind::Deflection) == 0);
}

TEST_CASE("pure step matches in-place advance") {
    const auto s = scenarios::maze();
    SimState a = initial_state(s);
    for (int i = 0; i < 50; ++i) advance(s, a, s.dt);
    SimState b = initial_state(s);
    for (int i = 0; i < 50; ++i) b = step(s, b, s.dt);
    CHECK(a.tip().position == b.tip().position);
    CHECK(a.event_log == b.event_log);
    CHECK_THROWS_AS(step(s, a, 0.0), DomainError);
}

TEST_CASE("45 degree wall: heading follows the wall tangent") {
    PlanarScenario s = open_space();
    s.walls = {{{0.3, -0.5}, {2.3, 1.5}}};
    const auto state = run_steps(s, 0.01, 2000);
    const double c = std::sqrt(0.5);
    CHECK(state.tip_heading.x == doctest::Approx(c).epsilon(1e-12));
    CHECK(state.tip_heading.y == doctest::Approx(c).epsilon(1e-12));
    REQUIRE(count_events(state, EventKind::Deflection) == 1);
    const auto it = std::find_if(state.event_log.begin(), state.event_log.end(),
                                 [](const Event& e) { return e.kind == EventKind::Deflection; });
    CHECK(it->value == doctest::Approx(units::kPi / 4).epsilon(1e-9));
    CHECK(it->wall == 0);
    // Riding the wall at full radius.
    CHECK(geom::distance(s.walls[0], state.tip().position) == doctest::Approx(s.membrane_diameter / 2).epsilon(1e-6));
}

TEST_CASE("head-on wall: tie keeps the stored orientation") {
    PlanarScenario s = open_space();
    s.walls = {{{0.5, -1.0}, {0.5, 1.0}}};
    auto state = run_steps(s, 0.01, 1500);
    CHECK(state.tip_heading.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(state.tip_heading.y == doctest::Approx(1.0));

    s.walls = {{{0.5, 1.0}, {0.5, -1.0}}};
    state = run_steps(s, 0.01, 1500);
    CHECK(state.tip_heading.y == doctest::Approx(-1.0));
}

TEST_CASE("pinched corridor: width clamps in the narrow section") {
    const double narrow = 0.12;
    const auto s = pinched_corridor(0.3, narrow);
    const auto result = run(s);
    CHECK(result.outcome == Outcome::GoalReached);
    const auto& log = result.final_state.event_log;
    REQUIRE(count_events(result.final_state, EventKind::SqueezeBegin) == 1);
    REQUIRE(count_events(result.final_state, EventKind::SqueezeEnd) == 1);
    CHECK(count_events(result.final_state, EventKind::Deflection) == 0);

    // The membrane first touches the pinch corners once the tip is within
    // its radius of them: x = 1 - sqrt(r^2 - (w/2)^2), and symmetrically past 1.5.
    const double r = s.membrane_diameter / 2;
    const double reach = std::sqrt(r * r - narrow * narrow / 4);
    const double step_len = s.tip_speed * s.dt;
    for (const auto& e : log) {
        if (e.kind == EventKind::SqueezeBegin) {
            const double x = 0.05 + s.tip_speed * e.time;
            CHECK(x == doctest::Approx(1.0 - reach).epsilon(step_len));
            CHECK(e.value < s.membrane_diameter);
        }
        if (e.kind == EventKind::SqueezeEnd) {
            const double x = 0.05 + s.tip_speed * e.time;
            CHECK(x == doctest::Approx(1.5 + reach).epsilon(step_len));
        }
    }

    // Replay and inspect the width field inside the pinch.
    SimState state = initial_state(s);
    bool saw_clamp = false;
    while (state.tip().position.x < 1.45) advance(s, state, s.dt);
    for (const auto& p : state.centerline) {
        CHECK(p.width > s.device_diameter);
        CHECK(p.width <= s.membrane_diameter);
        if (p.position.x > 1.0 + 1e-9 && p.position.x < 1.5) {
            CHECK(p.width == doctest::Approx(narrow).epsilon(1e-9));
            saw_clamp = true;
        }
        if (p.position.x < 1.0 - reach - step_len) CHECK(p.width == s.membrane_diameter);
    }
    CHECK(saw_clamp);
}

TEST_CASE("corridor wider than the membrane runs free") {
    const auto result = run(scenarios::corridor(0.2));
    CHECK(result.outcome == Outcome::GoalReached);
    CHECK(count_events(result.final_state, EventKind::Deflection) == 0);
    CHECK(count_events(result.final_state, EventKind::SqueezeBegin) == 0);
}

TEST_CASE("pinch narrower than the device blocks") {
    const auto result = run(pinched_corridor(0.3, 0.09));
    CHECK(result.outcome == Outcome::Stuck);
    CHECK(result.final_state.tip().position.x < 1.0);
    CHECK(count_events(result.final_state, EventKind::Stuck) == 1);
}

TEST_CASE("maze traversal") {
    const auto open = run(scenarios::maze(0.11));
    CHECK(open.outcome == Outcome::GoalReached);
    CHECK(count_events(open.final_state, EventKind::Deflection) >= 2);
    CHECK(count_events(open.final_state, EventKind::SqueezeBegin) == 1);
    CHECK(count_events(open.final_state, EventKind::SqueezeEnd) == 1);
    CHECK(open.final_state.event_log.back().kind == EventKind::GoalReached);

    const auto shut = run(scenarios::maze(0.09));
    CHECK(shut.outcome == Outcome::Stuck);
    CHECK(shut.final_state.tip().position.x < 2.4);
}

TEST_CASE("simulator invariants along the maze run") {
    const auto s = scenarios::maze();
    std::map<std::uint64_t, Vec2> laid;
    bool skin_fixed = true;
    bool length_ok = true;
    bool width_ok = true;
    bool no_penetration = true;
    double last_time = 0.0;
    bool ordered = true;
    std::size_t seen_events = 0;

    const auto observe = [&](const SimState& state, std::size_t) {
        for (const auto& p : state.centerline) {
            const auto [it, fresh] = laid.emplace(p.id, p.position);
            if (!fresh && !(it->second == p.position)) skin_fixed = false;
            if (!(p.width > s.device_diameter) || p.width > s.membrane_diameter) width_ok = false;
            if (clearance(s, p.position) < p.width / 2 - kPenetrationTolerance) no_penetration = false;
        }
        if (centerline_length(state) > s.robot_body_length + 1e-9) length_ok = false;
        if (std::abs(centerline_length(state) - state.arc_length) > 1e-9) length_ok = false;
        for (std::size_t i = seen_events; i < state.event_log.size(); ++i) {
            if (state.event_log[i].time < last_time) ordered = false;
            last_time = state.event_log[i].time;
        }
        seen_events = state.event_log.size();
    };
    const auto result = run(s, observe);
    CHECK(result.outcome == Outcome::GoalReached);
    CHECK(skin_fixed);
    CHECK(length_ok);
    CHECK(width_ok);
    CHECK(no_penetration);
    CHECK(ordered);
}

TEST_CASE("runs are deterministic") {
    const auto a = run(scenarios::maze());
    const auto b = run(scenarios::maze());
    CHECK(a.final_state.event_log == b.final_state.event_log);
    CHECK(a.final_state.tip().position == b.final_state.tip().position);
}

TEST_CASE("aperture check") {
    CHECK(aperture_check(0.11, 0.137, 0.104) == ApertureVerdict::PassSqueeze);
    CHECK(aperture_check(0.20, 0.137, 0.104) == ApertureVerdict::PassFree);
    CHECK(aperture_check(0.09, 0.137, 0.104) == ApertureVerdict::Blocked);
    CHECK(aperture_check(0.104, 0.137, 0.104) == ApertureVerdict::PassSqueeze);
    CHECK_THROWS_AS(aperture_check(0.1, 0.1, 0.2), DomainError);
}

TEST_CASE("pipe climb time") {
    CHECK(pipe_climb_time(0.305, 0.061) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(pipe_climb_time(0.305, 0.122) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(pipe_climb_time(0.0, 0.061) == 0.0);
    CHECK_THROWS_AS(pipe_climb_time(0.3, 0.0), DomainError);
}

TEST_CASE("scenario validation") {
    auto s = scenarios::maze();
    CHECK_NOTHROW(validate(s));
    s.device_diameter = 0.2;
    CHECK_THROWS_AS(validate(s), DomainError);
    s = scenarios::maze();
    s.walls.push_back({{0.5, -1.0}, {0.5, 1.0}});
    CHECK_THROWS_AS(validate(s), DomainError);
    s = scenarios::maze();
    s.tip_speed = 0.0;
    CHECK_THROWS_AS(validate(s), DomainError);
    s = scenarios::maze();
    s.goal_region = {{0, 0}, {2, 0}, {1, 0.3}, {1, 2}};
    CHECK_THROWS_AS(validate(s), DomainError);
}
