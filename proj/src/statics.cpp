#include "tensileg/statics.hpp"

#include "tensileg/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace tensileg {

namespace {

struct Triangle {
    double knee_interior; ///< gamma, angle at the knee [rad]
    double hip_lean;      ///< beta, femur angle off the vertical at the hip [rad]
};

Triangle solve_triangle(double l_femur, double l_tibia, double height) {
    const double cos_gamma =
        (l_femur * l_femur + l_tibia * l_tibia - height * height) / (2.0 * l_femur * l_tibia);
    const double cos_beta =
        (height * height + l_femur * l_femur - l_tibia * l_tibia) / (2.0 * height * l_femur);
    if (!(cos_gamma > -1.0) || !(cos_gamma < 1.0) || !(std::abs(cos_beta) < 1.0)) {
        throw GeometryError("leg pose infeasible at foot-hip distance " +
                            std::to_string(height));
    }
    return Triangle{std::acos(cos_gamma), std::acos(cos_beta)};
}

} // namespace

double leg_height(const LegModel& model, double knee_interior_angle) {
    if (!(knee_interior_angle > 0.0) || knee_interior_angle > std::numbers::pi) {
        throw DomainError("knee interior angle must lie in (0, pi]");
    }
    const double lf = model.femur_length();
    const double lt = model.tibia_length();
    return std::sqrt(lf * lf + lt * lt - 2.0 * lf * lt * std::cos(knee_interior_angle));
}

LegClosure closure_at_compression(const LegModel& model, double compression) {
    const double lf = model.femur_length();
    const double lt = model.tibia_length();
    const double rest_height = leg_height(model, model.rest_knee_interior_angle());
    const double h = rest_height - compression;
    if (!(h > std::abs(lf - lt)) || !(h < lf + lt)) {
        throw GeometryError("compression " + std::to_string(compression) +
                            " leaves the kinematic range of the leg");
    }
    const Triangle rest = solve_triangle(lf, lt, rest_height);
    const Triangle now = solve_triangle(lf, lt, h);

    LegClosure closure;
    closure.height = h;
    closure.knee_deflection = rest.knee_interior - now.knee_interior;
    closure.hip_deflection = now.hip_lean - rest.hip_lean;
    // d(gamma)/dh from the law of cosines; compression y = rest_height - h.
    const double dgamma_dh = h / (lf * lt * std::sin(now.knee_interior));
    closure.knee_deflection_rate = dgamma_dh;
    const double dcosbeta_dh = (h * h - lf * lf + lt * lt) / (2.0 * h * h * lf);
    closure.hip_deflection_rate = dcosbeta_dh / std::sin(now.hip_lean);
    return closure;
}

double vertical_reaction_force(const LegModel& model, const StiffnessSetting& setting,
                               double compression) {
    const LegClosure closure = closure_at_compression(model, compression);
    const double tau_hip =
        joint_restoring_torque(model, setting, JointId::Hip, closure.hip_deflection);
    const double tau_knee =
        joint_restoring_torque(model, setting, JointId::Knee, closure.knee_deflection);
    return tau_hip * closure.hip_deflection_rate + tau_knee * closure.knee_deflection_rate;
}

double reaction_force(const CompressionScenario& scenario, double compression) {
    if (!(scenario.step > 0.0) || scenario.step > scenario.max_compression) {
        throw DomainError("scenario step must satisfy 0 < step <= max_compression");
    }
    // One ulp of slack so a grid endpoint assembled as i*step stays in range.
    const double upper = scenario.max_compression * (1.0 + 1e-12);
    if (compression < 0.0 || compression > upper) {
        throw DomainError("compression outside [0, max_compression]");
    }
    return vertical_reaction_force(scenario.model, scenario.setting, compression);
}

std::vector<SweepRow> compression_sweep(const CompressionScenario& scenario) {
    if (!(scenario.step > 0.0) || scenario.step > scenario.max_compression) {
        throw DomainError("scenario step must satisfy 0 < step <= max_compression");
    }
    const auto rows = static_cast<std::size_t>(
        std::floor(scenario.max_compression / scenario.step + 1e-9));
    std::vector<SweepRow> table;
    table.reserve(rows + 1);
    for (std::size_t i = 0; i <= rows; ++i) {
        const double c = static_cast<double>(i) * scenario.step;
        table.push_back(SweepRow{c, reaction_force(scenario, c)});
    }
    return table;
}

} // namespace tensileg
