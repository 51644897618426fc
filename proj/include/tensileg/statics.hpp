#pragma once

#include "tensileg/leg.hpp"

#include <vector>

namespace tensileg {

/**
 * @brief Quasi-static vertical compression of the planar leg: foot pinned at
 * the origin, hip constrained to the vertical line through the foot, pelvis
 * clamped to the crosshead.
 */
struct CompressionScenario {
    LegModel model = LegModel::prototype();
    StiffnessSetting setting;
    double max_compression = 0.10; ///< [m]
    double step = 5e-4;            ///< grid spacing [m]
};

/// Foot-to-hip distance from the interior knee angle [m], law-of-cosines
/// closure of the foot-knee-hip triangle. Angle must lie in (0, pi].
double leg_height(const LegModel& model, double knee_interior_angle);

/// Joint deflections and their sensitivities to vertical compression,
/// resolved from the pinned-foot / vertical-hip triangle closure.
struct LegClosure {
    double hip_deflection = 0.0;       ///< [rad]
    double knee_deflection = 0.0;      ///< [rad]
    double hip_deflection_rate = 0.0;  ///< d(hip deflection)/d(compression) [rad/m]
    double knee_deflection_rate = 0.0; ///< [rad/m]
    double height = 0.0;               ///< foot-to-hip distance [m]
};

/// Closure at the given vertical compression of the hip below its rest
/// height. Negative compression (extension) is allowed up to the straight-leg
/// singularity. Throws GeometryError for kinematically infeasible poses.
LegClosure closure_at_compression(const LegModel& model, double compression);

/// Vertical force exerted on the crosshead at the given compression [N],
/// by virtual work: F = sum_j tau_j * d(theta_j)/dy.
double vertical_reaction_force(const LegModel& model, const StiffnessSetting& setting,
                               double compression);

/// Scenario-level wrapper enforcing 0 <= compression <= max_compression.
double reaction_force(const CompressionScenario& scenario, double compression);

struct SweepRow {
    double compression = 0.0; ///< [m]
    double force = 0.0;       ///< [N]
};

/// Deterministic force table on the scenario grid, first row (0, 0).
std::vector<SweepRow> compression_sweep(const CompressionScenario& scenario);

} // namespace tensileg
