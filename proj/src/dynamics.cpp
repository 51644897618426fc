#include "tensileg/dynamics.hpp"

#include "tensileg/errors.hpp"
#include "tensileg/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tensileg {

namespace {

struct State {
    double y;
    double v;
};

class ContactDynamics {
public:
    ContactDynamics(const DropScenario& scenario, double contact_height, double mass)
        : scenario_(scenario), contact_height_(contact_height), mass_(mass) {}

    double acceleration(const State& s) const {
        const double compression = contact_height_ - s.y;
        const double spring = vertical_reaction_force(scenario_.model, scenario_.setting,
                                                      compression);
        return (-mass_ * kGravity + spring - scenario_.model.damping_c() * s.v) / mass_;
    }

    State step(const State& s, double dt) const {
        const double a1 = acceleration(s);
        const State s2{s.y + 0.5 * dt * s.v, s.v + 0.5 * dt * a1};
        const double a2 = acceleration(s2);
        const State s3{s.y + 0.5 * dt * s2.v, s.v + 0.5 * dt * a2};
        const double a3 = acceleration(s3);
        const State s4{s.y + dt * s3.v, s.v + dt * a3};
        const double a4 = acceleration(s4);
        return State{s.y + dt / 6.0 * (s.v + 2.0 * s2.v + 2.0 * s3.v + s4.v),
                     s.v + dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4)};
    }

private:
    const DropScenario& scenario_;
    double contact_height_;
    double mass_;
};

} // namespace

bool DropTrace::has_contact() const {
    return std::isfinite(contact_time);
}

DropTrace simulate_drop(const DropScenario& scenario) {
    if (!(scenario.drop_height > 0.0)) {
        throw DomainError("drop height must be positive");
    }
    if (!(scenario.integrator_dt > 0.0) || !(scenario.sim_duration > 0.0)) {
        throw DomainError("integrator dt and sim duration must be positive");
    }
    const double mass = scenario.added_mass + scenario.model.lumped_mass();
    if (!(mass > 0.0)) {
        throw DomainError("effective mass must be positive");
    }

    const double rest_height =
        leg_height(scenario.model, scenario.model.rest_knee_interior_angle());
    // Pelvis height when the foot just touches the plate.
    const double contact_height = scenario.model.pelvis_length() + rest_height;
    const ContactDynamics contact(scenario, contact_height, mass);

    const double dt = scenario.integrator_dt;
    const auto steps = static_cast<std::size_t>(std::floor(scenario.sim_duration / dt + 1e-9));

    DropTrace trace;
    trace.dt = dt;
    trace.release_height = contact_height + scenario.drop_height;
    trace.contact_time = std::numeric_limits<double>::quiet_NaN();
    trace.time.reserve(steps + 1);
    trace.pelvis_y.reserve(steps + 1);
    trace.pelvis_vy.reserve(steps + 1);
    trace.pelvis_ay.reserve(steps + 1);

    State s{trace.release_height, 0.0};
    bool in_contact = false;

    auto record = [&](std::size_t index) {
        trace.time.push_back(static_cast<double>(index) * dt);
        trace.pelvis_y.push_back(s.y);
        trace.pelvis_vy.push_back(s.v);
        trace.pelvis_ay.push_back(in_contact ? contact.acceleration(s) : -kGravity);
    };
    record(0);

    for (std::size_t i = 1; i <= steps; ++i) {
        if (in_contact) {
            s = contact.step(s, dt);
        } else {
            // Ballistic phase is closed form; detect the touchdown inside
            // this step and bisect the event time to 1e-9 s.
            auto flight_y = [&](double tau) { return s.y + s.v * tau - 0.5 * kGravity * tau * tau; };
            if (flight_y(dt) > contact_height) {
                s = State{flight_y(dt), s.v - kGravity * dt};
            } else {
                double lo = 0.0;
                double hi = dt;
                while (hi - lo > 1e-9) {
                    const double mid = 0.5 * (lo + hi);
                    (flight_y(mid) > contact_height ? lo : hi) = mid;
                }
                const double tau = 0.5 * (lo + hi);
                s = State{flight_y(tau), s.v - kGravity * tau};
                in_contact = true;
                trace.contact_time = static_cast<double>(i - 1) * dt + tau;
                s = contact.step(s, dt - tau);
            }
        }
        record(i);
    }

    if (trace.has_contact()) {
        double peak = -std::numeric_limits<double>::infinity();
        double min_y = trace.release_height;
        for (std::size_t i = 0; i < trace.time.size(); ++i) {
            if (trace.time[i] >= trace.contact_time) {
                peak = std::max(peak, trace.pelvis_ay[i]);
            }
            min_y = std::min(min_y, trace.pelvis_y[i]);
        }
        trace.peak_acceleration = peak;
        trace.max_deflection = trace.release_height - min_y;

        const std::size_t n = trace.pelvis_y.size();
        const std::size_t tail = std::max<std::size_t>(1, n / 10);
        double sum = 0.0;
        for (std::size_t i = n - tail; i < n; ++i) {
            sum += trace.release_height - trace.pelvis_y[i];
        }
        trace.steady_state_deflection = sum / static_cast<double>(tail);

        trace.deceleration_duration = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t i = 1; i < n; ++i) {
            if (trace.time[i] <= trace.contact_time) {
                continue;
            }
            if (trace.pelvis_vy[i - 1] < 0.0 && trace.pelvis_vy[i] >= 0.0) {
                const double frac = trace.pelvis_vy[i - 1] /
                                    (trace.pelvis_vy[i - 1] - trace.pelvis_vy[i]);
                const double crossing = trace.time[i - 1] + frac * dt;
                trace.deceleration_duration = crossing - trace.contact_time;
                break;
            }
        }
    } else {
        trace.peak_acceleration = std::numeric_limits<double>::quiet_NaN();
        trace.max_deflection = trace.release_height -
                               *std::min_element(trace.pelvis_y.begin(), trace.pelvis_y.end());
        trace.steady_state_deflection = std::numeric_limits<double>::quiet_NaN();
        trace.deceleration_duration = std::numeric_limits<double>::quiet_NaN();
    }
    return trace;
}

DropMetrics drop_metrics(const DropTrace& trace) {
    if (!trace.has_contact()) {
        throw NumericError("trace has no ground contact event within the horizon");
    }
    return DropMetrics{trace.peak_acceleration, trace.max_deflection,
                       trace.steady_state_deflection, trace.deceleration_duration};
}

double peak_reduction_percent(const DropMetrics& reference, const DropMetrics& other) {
    if (!(reference.peak_acceleration > 0.0)) {
        throw DomainError("reference peak acceleration must be positive");
    }
    return 100.0 * (reference.peak_acceleration - other.peak_acceleration) /
           reference.peak_acceleration;
}

} // namespace tensileg
