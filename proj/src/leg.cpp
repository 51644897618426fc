#include "tensileg/leg.hpp"

#include "tensileg/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace tensileg {

LegModel::LegModel(Params params)
    : params_(std::move(params)),
      joint_springs_(parallel_slack_system(params_.spring_stiffness,
                                           params_.engagement_offsets)) {
    if (!(params_.pelvis_length > 0.0) || !(params_.femur_length > 0.0) ||
        !(params_.tibia_length > 0.0)) {
        throw DomainError("segment lengths must be positive");
    }
    const double sum = params_.pelvis_length + params_.femur_length + params_.tibia_length;
    if (std::abs(sum - params_.total_extended_length) > 1e-9) {
        throw DomainError("segment lengths sum to " + std::to_string(sum) +
                          ", expected total extended length " +
                          std::to_string(params_.total_extended_length));
    }
    if (!(params_.drum_radius > 0.0) || !(params_.tristar_radius > 0.0) ||
        params_.drum_radius >= params_.tristar_radius) {
        throw DomainError("drum radius must be positive and smaller than tristar radius");
    }
    if (params_.lumped_mass < 0.0 || params_.damping_c < 0.0) {
        throw DomainError("lumped mass and damping must be >= 0");
    }
    const double interior = rest_knee_interior_angle();
    if (!(interior > 0.0) || !(interior < std::numbers::pi)) {
        throw DomainError("rest flexion angles leave no interior knee angle");
    }
}

double LegModel::rest_knee_interior_angle() const {
    return std::numbers::pi - (params_.rest_flexion_hip - params_.rest_flexion_knee);
}

double phi_from_h(double h, double arm_length) {
    if (!(arm_length > 0.0)) {
        throw DomainError("arm length must be positive");
    }
    if (!(h >= 0.0) || h > 2.0 * arm_length) {
        throw DomainError("grip distance h = " + std::to_string(h) +
                          " outside [0, 2*l1] for l1 = " + std::to_string(arm_length));
    }
    return 2.0 * std::asin(h / (2.0 * arm_length));
}

double h_from_phi(double phi, double arm_length) {
    if (!(arm_length > 0.0)) {
        throw DomainError("arm length must be positive");
    }
    if (!(phi >= 0.0) || phi > std::numbers::pi) {
        throw DomainError("joint angle phi outside [0, pi]");
    }
    return 2.0 * arm_length * std::sin(0.5 * phi);
}

double rig_torque(double force, double arm_length, double phi) {
    if (!(phi >= 0.0) || phi > std::numbers::pi) {
        throw DomainError("joint angle phi outside [0, pi]");
    }
    // sin((pi - phi)/2) == cos(phi/2), and evaluates to exactly zero at phi = pi.
    return force * arm_length * std::sin(0.5 * (std::numbers::pi - phi));
}

double joint_restoring_torque(const LegModel& model, const StiffnessSetting& setting,
                              JointId /*joint*/, double dtheta) {
    if (setting.slider_displacement < 0.0) {
        throw DomainError("slider displacement must be >= 0");
    }
    const double r = model.tristar_radius();
    const double x0 = setting.slider_displacement;
    const SpringNetwork& net = model.joint_springs();
    return r * (net.force(x0 + r * dtheta) - net.force(x0 - r * dtheta));
}

double required_actuation_torque(const LegModel& model, double payload_mass,
                                 double safety_factor) {
    if (payload_mass < 0.0) {
        throw DomainError("payload mass must be >= 0");
    }
    if (!(safety_factor > 0.0)) {
        throw DomainError("safety factor must be positive");
    }
    return 0.5 * payload_mass * kGravity * model.total_extended_length() * safety_factor *
           (model.drum_radius() / model.tristar_radius());
}

} // namespace tensileg
