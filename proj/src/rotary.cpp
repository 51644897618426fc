#include "tensileg/rotary.hpp"

#include "tensileg/errors.hpp"

#include <cmath>
#include <utility>

namespace tensileg {

AntagonisticJoint::AntagonisticJoint(double pulley_radius, SpringNetwork side_a,
                                     SpringNetwork side_b, double pretension_displacement)
    : pulley_radius_(pulley_radius),
      side_a_(std::move(side_a)),
      side_b_(std::move(side_b)),
      pretension_displacement_(pretension_displacement) {
    if (!(pulley_radius > 0.0) || !std::isfinite(pulley_radius)) {
        throw DomainError("pulley radius must be positive");
    }
    if (pretension_displacement < 0.0 || !std::isfinite(pretension_displacement)) {
        throw DomainError("pretension displacement must be >= 0");
    }
}

AntagonisticJoint AntagonisticJoint::identical_sides(double pulley_radius,
                                                     const SpringNetwork& side,
                                                     double pretension_displacement) {
    return AntagonisticJoint(pulley_radius, side, side, pretension_displacement);
}

AntagonisticJoint AntagonisticJoint::from_pretension_force(double pulley_radius,
                                                           const SpringElement& side_element,
                                                           double pretension_force) {
    const double x0 = solve_pretension_displacement(side_element, pretension_force);
    return AntagonisticJoint(pulley_radius, SpringNetwork::leaf(side_element),
                             SpringNetwork::leaf(side_element), x0);
}

double joint_torque(const AntagonisticJoint& joint, double theta) {
    if (!std::isfinite(theta)) {
        throw DomainError("joint angle must be finite");
    }
    const double r = joint.pulley_radius();
    const double x0 = joint.pretension_displacement();
    const double force_a = joint.side_a().force(x0 + r * theta);
    const double force_b = joint.side_b().force(x0 - r * theta);
    return r * (force_a - force_b);
}

double single_side_torque(const SpringNetwork& side, double pretension_displacement,
                          double pulley_radius, double theta) {
    return pulley_radius * side.force(pretension_displacement + pulley_radius * theta);
}

double rotational_stiffness_linear(double spring_stiffness, double cable_stiffness,
                                   double pulley_radius) {
    if (spring_stiffness < 0.0 || cable_stiffness < 0.0) {
        throw DomainError("stiffness coefficients must be >= 0");
    }
    if (!(pulley_radius > 0.0)) {
        throw DomainError("pulley radius must be positive");
    }
    return (spring_stiffness + cable_stiffness) * pulley_radius * pulley_radius;
}

double rotational_stiffness_quadratic(double k_l, double k_q, double pretension_displacement,
                                      double pulley_radius, double theta) {
    if (k_l < 0.0 || k_q < 0.0 || pretension_displacement < 0.0) {
        throw DomainError("stiffness coefficients and pretension must be >= 0");
    }
    if (!(pulley_radius > 0.0)) {
        throw DomainError("pulley radius must be positive");
    }
    const double r2 = pulley_radius * pulley_radius;
    return (k_l + 2.0 * k_q * pretension_displacement) * r2 +
           2.0 * k_q * r2 * pulley_radius * theta;
}

TangentStiffness tangent_stiffness(const AntagonisticJoint& joint, double theta, double step) {
    if (!(step > 0.0)) {
        throw DomainError("derivative step must be positive");
    }
    const double t_plus = joint_torque(joint, theta + step);
    const double t_here = joint_torque(joint, theta);
    const double t_minus = joint_torque(joint, theta - step);
    const double forward = (t_plus - t_here) / step;
    const double backward = (t_here - t_minus) / step;
    const double central = 0.5 * (forward + backward);
    // A slack boundary inside [theta-h, theta+h] makes the one-sided slopes
    // disagree by a finite stiffness jump, far above smooth truncation error.
    if (std::abs(forward - backward) > 1e-3 * (std::abs(central) + 1e-9)) {
        return TangentStiffness{forward, true};
    }
    return TangentStiffness{central, false};
}

} // namespace tensileg
