#pragma once

#include "tensileg/springs.hpp"

namespace tensileg {

/**
 * @brief Antagonistic pulley joint: one spring network per side, both
 * pre-stretched by a common displacement x0.
 *
 * Rotating the pulley by theta stretches side A to x0 + r_p*theta and
 * relaxes side B to x0 - r_p*theta; a slack side simply carries zero force.
 */
class AntagonisticJoint {
public:
    AntagonisticJoint(double pulley_radius, SpringNetwork side_a, SpringNetwork side_b,
                      double pretension_displacement);

    /// Same network on both sides, pre-stretched by x0.
    static AntagonisticJoint identical_sides(double pulley_radius, const SpringNetwork& side,
                                             double pretension_displacement);

    /// Identical linear/quadratic element per side; x0 is solved from the
    /// pretension force via the element's force law.
    static AntagonisticJoint from_pretension_force(double pulley_radius,
                                                   const SpringElement& side_element,
                                                   double pretension_force);

    double pulley_radius() const { return pulley_radius_; }
    double pretension_displacement() const { return pretension_displacement_; }
    const SpringNetwork& side_a() const { return side_a_; }
    const SpringNetwork& side_b() const { return side_b_; }

private:
    double pulley_radius_;
    SpringNetwork side_a_;
    SpringNetwork side_b_;
    double pretension_displacement_;
};

/// Net torque on the pulley [N*m]:
///   T(theta) = r_p * [F_a(x0 + r_p*theta) - F_b(x0 - r_p*theta)].
/// Odd in theta and zero at theta = 0 for identical sides.
double joint_torque(const AntagonisticJoint& joint, double theta);

/// Torque contributed by one side only [N*m]: r_p * F(x0 + r_p*theta).
/// This is the literal one-path torque of the linear/quadratic closed forms.
double single_side_torque(const SpringNetwork& side, double pretension_displacement,
                          double pulley_radius, double theta);

/// Single-side rotational stiffness of a linear spring+cable path [N*m/rad]:
///   k_theta = (k_s + k_c) * r_p^2.
/// The antagonistic two-sided tangent with both sides taut is twice this
/// value; use tangent_stiffness for the joint-level quantity.
double rotational_stiffness_linear(double spring_stiffness, double cable_stiffness,
                                   double pulley_radius);

/// Single-side rotational stiffness of a quadratic spring path, taut regime
/// (x0 + r_p*theta > 0) [N*m/rad]:
///   k_theta = (k_l + 2*k_q*x0) * r_p^2 + 2*k_q*r_p^3 * theta.
double rotational_stiffness_quadratic(double k_l, double k_q, double pretension_displacement,
                                      double pulley_radius, double theta);

/// Numeric tangent stiffness dT/dtheta of the antagonistic joint.
struct TangentStiffness {
    double value = 0.0;          ///< [N*m/rad]
    bool slack_transition = false; ///< one-sided estimate across a slack kink
};

/// Central difference of joint_torque with the given step. When the two
/// one-sided slopes disagree (a side crosses a slack boundary inside the
/// step), the forward derivative is returned and the transition flagged.
TangentStiffness tangent_stiffness(const AntagonisticJoint& joint, double theta,
                                   double step = 1e-6);

} // namespace tensileg
