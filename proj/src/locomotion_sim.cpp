#include "toroid/locomotion_sim.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "toroid/core_types.hpp"

namespace toroid::sim {

namespace {

using geom::cross;
using geom::dot;
using geom::norm;
using geom::normalized;
using geom::perp;

constexpr double kClearanceEps = 1e-9;      // slack when testing a full-width fit
constexpr double kContactSlack = 1e-6;      // walls this close count as touching
constexpr double kDeflectionEventAngle = 1e-6;
constexpr double kInitialSpacing = 0.005;   // m between initial body points
constexpr int kBisectionIterations = 60;
constexpr int kLateralSamples = 81;
constexpr int kMaxContactEventsPerStep = 8;
constexpr double kSlideProbe = 1e-6;      // m, trial slide to test a direction

struct StepContext {
    const PlanarScenario& scenario;
    double radius;         // inflated membrane radius
    double device_radius;

    double clearance_at(Vec2 p) const { return clearance(scenario, p); }
    bool fits(Vec2 p) const { return clearance_at(p) >= radius - kClearanceEps; }
};

bool shares_endpoint(const std::vector<Segment>& walls, std::size_t self, Vec2 p) {
    for (std::size_t j = 0; j < walls.size(); ++j) {
        if (j == self) continue;
        if (walls[j].a == p || walls[j].b == p) return true;
    }
    return false;
}

struct DeflectionChoice {
    std::size_t wall = 0;
    Vec2 heading;
    double change = std::numeric_limits<double>::infinity();
};

// Wall ends that no other wall continues from are panel edges; the membrane
// wraps around them sideways instead of being steered by them.
bool is_free_end_contact(const std::vector<Segment>& walls, std::size_t i, Vec2 at) {
    const auto proj = geom::closest_point(walls[i], at);
    const bool endpoint = proj.t <= 0.0 || proj.t >= 1.0;
    return endpoint && !shares_endpoint(walls, i, proj.point);
}

// Tangent of wall i oriented along the heading.
Vec2 contact_tangent(const Segment& w, Vec2 heading) {
    const Vec2 tangent = normalized(w.direction());
    const double along = dot(tangent, heading);
    if (along > 0.0) return tangent;
    if (along < 0.0) return -1.0 * tangent;
    // Exactly perpendicular incidence: follow the wall's stored orientation.
    return tangent;
}

// Slide directions offered by the walls touching the tip at `at`, ordered
// by heading change and then by wall index.
std::vector<DeflectionChoice> deflection_candidates(const StepContext& ctx, Vec2 at, Vec2 heading) {
    const auto& walls = ctx.scenario.walls;
    std::vector<DeflectionChoice> out;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        if (geom::distance(walls[i], at) >= ctx.radius + kContactSlack) continue;
        if (is_free_end_contact(walls, i, at)) continue;
        const Vec2 t = contact_tangent(walls[i], heading);
        out.push_back({i, t, std::acos(std::clamp(dot(t, heading), -1.0, 1.0))});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const DeflectionChoice& a, const DeflectionChoice& b) { return a.change < b.change; });
    return out;
}

// Largest s in [0, 1] such that the membrane still fits at from + s * delta.
// Contact is placed half the fit slack short of the wall so that a slide
// along it cannot fail the fit test on round-off.
double time_of_impact(const StepContext& ctx, Vec2 from, Vec2 delta) {
    const double level = ctx.radius - 0.5 * kClearanceEps;
    if (ctx.clearance_at(from) < level) return 0.0;
    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < kBisectionIterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ctx.clearance_at(from + mid * delta) >= level) lo = mid;
        else hi = mid;
    }
    return lo;
}

struct LateralFit {
    Vec2 point;
    double clearance = 0.0;
};

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - ratio * (b - a);
    double d = a + ratio * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < kBisectionIterations; ++i) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

// Searches the line through `base` across the heading for the best place to
// put the tip: the nearest point where the full membrane fits, or failing
// that the point of largest clearance.
LateralFit lateral_fit(const StepContext& ctx, Vec2 base, Vec2 heading) {
    const Vec2 across = perp(heading);
    const auto at = [&](double u) { return base + u * across; };
    const auto g = [&](double u) { return ctx.clearance_at(at(u)); };

    std::array<double, kLateralSamples> us{};
    std::array<double, kLateralSamples> gs{};
    for (int k = 0; k < kLateralSamples; ++k) {
        us[k] = -ctx.radius + 2.0 * ctx.radius * k / (kLateralSamples - 1);
        gs[k] = g(us[k]);
    }

    const double fit_level = ctx.radius - kClearanceEps;
    // Walks from a fitting offset back towards the base (which does not fit)
    // to find the smallest sideways shift that still fits.
    const auto nearest_fit = [&](double fitting) {
        double inner = fitting;
        double outer = 0.0;
        for (int i = 0; i < kBisectionIterations; ++i) {
            const double m = 0.5 * (inner + outer);
            if (g(m) >= fit_level) inner = m;
            else outer = m;
        }
        return LateralFit{at(inner), g(inner)};
    };

    const int mid = kLateralSamples / 2;
    for (int off = 0; off <= mid; ++off) {
        for (const int k : {mid - off, mid + off}) {
            if (gs[k] >= fit_level) return nearest_fit(us[k]);
        }
    }

    const auto best = std::max_element(gs.begin(), gs.end()) - gs.begin();
    const double lo = us[std::max<std::ptrdiff_t>(best - 1, 0)];
    const double hi = us[std::min<std::ptrdiff_t>(best + 1, kLateralSamples - 1)];
    double u = golden_max(g, lo, hi);
    if (g(u) < gs[best]) u = us[best];
    if (g(u) >= fit_level) return nearest_fit(u);
    return {at(u), g(u)};
}

void log_event(SimState& state, EventKind kind, int wall = -1, double value = 0.0) {
    state.event_log.push_back({kind, state.steps, state.elapsed, wall, value});
}

bool had_contact(const std::vector<Contact>& contacts, std::size_t wall) {
    return std::any_of(contacts.begin(), contacts.end(),
                       [&](const Contact& c) { return c.wall == wall; });
}

}  // namespace

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::ContactBegin: return "contact-begin";
        case EventKind::Deflection: return "deflection";
        case EventKind::SqueezeBegin: return "squeeze-begin";
        case EventKind::SqueezeEnd: return "squeeze-end";
        case EventKind::GoalReached: return "goal-reached";
        case EventKind::Stuck: return "stuck";
    }
    return "unknown";
}

std::string_view to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::GoalReached: return "goal-reached";
        case Outcome::Stuck: return "stuck";
        case Outcome::Timeout: return "timeout";
    }
    return "unknown";
}

std::string_view to_string(ApertureVerdict verdict) {
    switch (verdict) {
        case ApertureVerdict::PassFree: return "pass-free";
        case ApertureVerdict::PassSqueeze: return "pass-squeeze";
        case ApertureVerdict::Blocked: return "blocked";
    }
    return "unknown";
}

void validate(const PlanarScenario& s) {
    const auto require = [](bool ok, const char* msg) {
        if (!ok) throw DomainError(msg);
    };
    require(s.membrane_diameter > 0.0 && s.device_diameter > 0.0, "diameters must be positive");
    require(s.device_diameter < s.membrane_diameter, "device_diameter must be below membrane_diameter");
    require(s.tip_speed > 0.0, "tip_speed must be positive");
    require(s.max_sim_time > 0.0, "max_sim_time must be positive");
    require(s.dt > 0.0, "dt must be positive");
    require(s.robot_body_length > 0.0, "robot_body_length must be positive");
    require(std::abs(norm(s.start.heading) - 1.0) < 1e-9, "start heading must be a unit vector");
    require(s.goal_region.empty() || geom::is_convex(s.goal_region), "goal_region must be a convex polygon");
    for (std::size_t i = 0; i < s.walls.size(); ++i) {
        require(s.walls[i].length() > 0.0, "walls must have nonzero length");
        for (std::size_t j = i + 1; j < s.walls.size(); ++j) {
            const Segment& u = s.walls[i];
            const Segment& v = s.walls[j];
            if (!geom::segments_intersect(u, v)) continue;
            const bool joined = u.a == v.a || u.a == v.b || u.b == v.a || u.b == v.b;
            require(joined, "walls must not intersect except at shared endpoints");
        }
    }
}

double clearance(const PlanarScenario& scenario, Vec2 p) {
    double best = std::numeric_limits<double>::infinity();
    for (const Segment& w : scenario.walls) best = std::min(best, geom::distance(w, p));
    return best;
}

double centerline_length(const SimState& state) {
    double total = 0.0;
    for (std::size_t i = 1; i < state.centerline.size(); ++i) {
        total += norm(state.centerline[i].position - state.centerline[i - 1].position);
    }
    return total;
}

std::size_t count_events(const SimState& state, EventKind kind) {
    return static_cast<std::size_t>(std::count_if(state.event_log.begin(), state.event_log.end(),
                                                  [&](const Event& e) { return e.kind == kind; }));
}

SimState initial_state(const PlanarScenario& scenario) {
    validate(scenario);
    SimState state;
    state.tip_heading = scenario.start.heading;
    const auto segments =
        static_cast<std::size_t>(std::ceil(scenario.robot_body_length / kInitialSpacing - 1e-9));
    const double spacing = scenario.robot_body_length / static_cast<double>(segments);
    for (std::size_t i = 0; i <= segments; ++i) {
        const double back = spacing * static_cast<double>(segments - i);
        state.centerline.push_back(
            {state.next_id++, scenario.start.position - back * scenario.start.heading, scenario.membrane_diameter});
    }
    state.arc_length = centerline_length(state);
    return state;
}

void advance(const PlanarScenario& scenario, SimState& state, double dt) {
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    const StepContext ctx{scenario, scenario.membrane_diameter / 2.0, scenario.device_diameter / 2.0};
    const Vec2 tip = state.tip().position;
    const Vec2 heading = state.tip_heading;
    const double commanded = scenario.tip_speed * dt;

    state.steps += 1;
    state.elapsed += dt;

    // Path of the tip during this step: contact points first, then the end.
    std::vector<Vec2> path;
    Vec2 pos = tip;
    Vec2 dir = heading;
    double remaining = commanded;
    double width = scenario.membrane_diameter;
    bool moved = true;
    std::vector<DeflectionChoice> deflections;

    bool resolved = false;
    if (ctx.fits(tip)) {
        for (int event = 0; event < kMaxContactEventsPerStep && !resolved; ++event) {
            const Vec2 target = pos + remaining * dir;
            if (ctx.fits(target)) {
                pos = target;
                resolved = true;
                break;
            }
            // Run up to the wall, then continue along the smallest admissible
            // slide for the rest of the step.
            const double s = time_of_impact(ctx, pos, remaining * dir);
            const Vec2 touch = pos + s * remaining * dir;
            remaining *= 1.0 - s;
            if (touch != pos) path.push_back(touch);
            pos = touch;

            const auto candidates = deflection_candidates(ctx, touch, dir);
            const double probe = std::min(remaining, kSlideProbe);
            const auto admissible = std::find_if(candidates.begin(), candidates.end(), [&](const auto& c) {
                return ctx.fits(touch + probe * c.heading);
            });
            // Only wall ends ahead, or every slide runs into another wall.
            if (admissible == candidates.end()) break;
            dir = admissible->heading;
            deflections.push_back(*admissible);
        }
    }
    if (!resolved) {
        // Full width does not fit ahead: shift sideways around wall ends, or
        // squeeze into the gap.
        const LateralFit fit = lateral_fit(ctx, pos + remaining * dir, dir);
        if (fit.clearance >= ctx.radius - kClearanceEps) {
            pos = fit.point;
        } else if (fit.clearance > ctx.device_radius) {
            pos = fit.point;
            width = 2.0 * fit.clearance;
        } else {
            moved = pos != tip;
        }
    }
    path.push_back(pos);
    const Vec2 next_heading = dir;

    double advanced = 0.0;
    if (moved) {
        Vec2 from = tip;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const double seg = norm(path[i] - from);
            if (seg == 0.0) continue;
            const double w = i + 1 == path.size() ? width : scenario.membrane_diameter;
            state.centerline.push_back({state.next_id++, path[i], w});
            state.arc_length += seg;
            advanced += seg;
            from = path[i];
        }
        while (state.centerline.size() > 1 && state.arc_length > scenario.robot_body_length) {
            state.arc_length -= norm(state.centerline[1].position - state.centerline[0].position);
            state.centerline.pop_front();
        }
        if (state.centerline.size() == 1) state.arc_length = 0.0;
    }
    state.tip_heading = next_heading;

    for (const DeflectionChoice& d : deflections) {
        if (d.change > kDeflectionEventAngle) {
            log_event(state, EventKind::Deflection, static_cast<int>(d.wall), d.change);
        }
    }

    const BodyPoint& head = state.tip();
    std::vector<Contact> contacts;
    for (std::size_t i = 0; i < scenario.walls.size(); ++i) {
        if (geom::distance(scenario.walls[i], head.position) <= head.width / 2.0 + kContactSlack) {
            contacts.push_back({head.id, i});
            if (!had_contact(state.contacts, i)) log_event(state, EventKind::ContactBegin, static_cast<int>(i));
        }
    }
    state.contacts = std::move(contacts);

    const bool squeezing = head.width < scenario.membrane_diameter;
    if (squeezing && !state.squeezing) log_event(state, EventKind::SqueezeBegin, -1, head.width);
    if (!squeezing && state.squeezing) log_event(state, EventKind::SqueezeEnd, -1, head.width);
    state.squeezing = squeezing;

    if (advanced < kStuckAdvanceFraction * commanded) {
        if (++state.slow_steps >= kStuckSteps && !state.stuck) {
            state.stuck = true;
            log_event(state, EventKind::Stuck);
        }
    } else {
        state.slow_steps = 0;
    }

    if (!state.goal_reached && geom::inside_convex(scenario.goal_region, head.position)) {
        state.goal_reached = true;
        log_event(state, EventKind::GoalReached);
    }
}

SimState step(const PlanarScenario& scenario, const SimState& state, double dt) {
    SimState next = state;
    advance(scenario, next, dt);
    return next;
}

RunResult run(const PlanarScenario& scenario, const StepObserver& observer) {
    RunResult result{initial_state(scenario), Outcome::Timeout};
    SimState& state = result.final_state;
    if (geom::inside_convex(scenario.goal_region, state.tip().position)) {
        state.goal_reached = true;
        log_event(state, EventKind::GoalReached);
        result.outcome = Outcome::GoalReached;
        return result;
    }
    const auto max_steps = static_cast<std::size_t>(std::ceil(scenario.max_sim_time / scenario.dt - 1e-9));
    for (std::size_t i = 0; i < max_steps; ++i) {
        const std::size_t first_new = state.event_log.size();
        advance(scenario, state, scenario.dt);
        if (observer) observer(state, first_new);
        if (state.goal_reached) {
            result.outcome = Outcome::GoalReached;
            break;
        }
        if (state.stuck) {
            result.outcome = Outcome::Stuck;
            break;
        }
    }
    return result;
}

SimState run_steps(const PlanarScenario& scenario, double dt, std::size_t n) {
    SimState state = initial_state(scenario);
    for (std::size_t i = 0; i < n; ++i) advance(scenario, state, dt);
    return state;
}

ApertureVerdict aperture_check(double aperture_width, double membrane_diameter, double device_diameter) {
    if (!(aperture_width > 0.0) || !(membrane_diameter > 0.0) || !(device_diameter > 0.0)) {
        throw DomainError("aperture and diameters must be positive");
    }
    if (!(device_diameter < membrane_diameter)) {
        throw DomainError("device_diameter must be below membrane_diameter");
    }
    if (aperture_width >= membrane_diameter) return ApertureVerdict::PassFree;
    if (aperture_width >= device_diameter) return ApertureVerdict::PassSqueeze;
    return ApertureVerdict::Blocked;
}

double pipe_climb_time(double pipe_length, double tip_speed) {
    if (pipe_length < 0.0 || !(tip_speed > 0.0)) {
        throw DomainError("pipe length must be nonnegative and tip speed positive");
    }
    return pipe_length / tip_speed;
}

}  // namespace toroid::sim
