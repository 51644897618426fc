#pragma once

#include "tensileg/springs.hpp"
#include "tensileg/units.hpp"

#include <vector>

namespace tensileg {

enum class JointId { Hip, Knee };

/// Slider position of the variable stiffness mechanism: the common initial
/// displacement imposed on every joint spring network [m].
struct StiffnessSetting {
    double slider_displacement = 0.0;
};

/**
 * @brief Planar two-joint leg: pelvis offset, femur and tibia segments, with
 * one antagonistic parallel-slack spring bank acting on both joints.
 *
 * Immutable after construction; the constructor enforces positive lengths,
 * segment lengths summing to the total extended length, and drum radius
 * smaller than the tristar radius.
 */
class LegModel {
public:
    struct Params {
        double pelvis_length = 0.13;  ///< rigid offset above the hip [m]
        double femur_length = 0.35;   ///< [m]
        double tibia_length = 0.35;   ///< [m]
        double total_extended_length = 0.83; ///< consistency value [m]
        double rest_flexion_hip = deg_to_rad(25.0);   ///< [rad]
        double rest_flexion_knee = -deg_to_rad(25.0); ///< [rad]
        double drum_radius = 0.005;   ///< winch drum [m]
        double tristar_radius = 0.060; ///< deflection pulleys in the pivot [m]
        double lumped_mass = 1.0;     ///< leg mass lumped at the pelvis [kg]
        double damping_c = 5.0;       ///< vertical damping [N*s/m]
        double spring_stiffness = 388.4; ///< per spring [N/m]
        std::vector<double> engagement_offsets = {0.0, 0.012, 0.036}; ///< [m]
    };

    explicit LegModel(Params params);

    /// Paper-scale defaults.
    static LegModel prototype() { return LegModel(Params{}); }

    double pelvis_length() const { return params_.pelvis_length; }
    double femur_length() const { return params_.femur_length; }
    double tibia_length() const { return params_.tibia_length; }
    double total_extended_length() const { return params_.total_extended_length; }
    double rest_flexion_hip() const { return params_.rest_flexion_hip; }
    double rest_flexion_knee() const { return params_.rest_flexion_knee; }
    double drum_radius() const { return params_.drum_radius; }
    double tristar_radius() const { return params_.tristar_radius; }
    double lumped_mass() const { return params_.lumped_mass; }
    double damping_c() const { return params_.damping_c; }
    const SpringNetwork& joint_springs() const { return joint_springs_; }

    /// Interior knee angle (femur-tibia) at the rest pose [rad]:
    /// pi minus the total flexion split across the two joints.
    double rest_knee_interior_angle() const;

private:
    Params params_;
    SpringNetwork joint_springs_;
};

/// Characterization-rig kinematics: joint angle from the grip distance h,
/// phi = 2*asin(h / (2*l1)), in [0, pi].
double phi_from_h(double h, double arm_length);

/// Inverse of phi_from_h: h = 2*l1*sin(phi/2).
double h_from_phi(double phi, double arm_length);

/// Torque balanced by the joint on the characterization rig [N*m]:
/// M = F * l1 * cos(phi/2), exactly zero at phi = pi.
double rig_torque(double force, double arm_length, double phi);

/// Antagonistic restoring torque of one joint at deflection dtheta from its
/// rest angle [N*m], with the slider displacement as common pretension:
///   tau = r_tristar * [F(x0 + r*dtheta) - F(x0 - r*dtheta)].
/// Odd in dtheta; both joints share the same spring bank and moment arm.
double joint_restoring_torque(const LegModel& model, const StiffnessSetting& setting,
                              JointId joint, double dtheta);

/// Winch motor torque needed to hold the payload on the fully extended lever
/// arm [N*m]: 0.5 * m * g * l * safety_factor * (r_drum / r_tristar).
double required_actuation_torque(const LegModel& model, double payload_mass,
                                 double safety_factor);

} // namespace tensileg
