#pragma once

#include "tensileg/leg.hpp"
#include "tensileg/statics.hpp"

#include <vector>

namespace tensileg {

/// Drop test on a vertical guide: free fall until the foot meets the ground,
/// then single-DOF flexion dynamics with the foot pinned.
struct DropScenario {
    LegModel model = LegModel::prototype();
    StiffnessSetting setting;
    double drop_height = 0.20;   ///< foot tip to ground at release [m]
    double added_mass = 0.254;   ///< guide cart mass at the pelvis [kg]
    double integrator_dt = 1e-4; ///< [s]
    double sim_duration = 1.0;   ///< [s]
};

/// Uniformly sampled drop trajectory plus extracted impact quantities.
/// Deflections are reported as downward displacement of the pelvis from its
/// release height (positive numbers).
struct DropTrace {
    double dt = 0.0;
    std::vector<double> time;      ///< [s], t = 0 at release
    std::vector<double> pelvis_y;  ///< height above the ground plate [m]
    std::vector<double> pelvis_vy; ///< [m/s]
    std::vector<double> pelvis_ay; ///< [m/s^2]

    double release_height = 0.0;        ///< pelvis_y at t = 0 [m]
    double contact_time = 0.0;          ///< NaN when the foot never lands [s]
    double peak_acceleration = 0.0;     ///< max pelvis_ay after contact [m/s^2]
    double max_deflection = 0.0;        ///< release_height - min(pelvis_y) [m]
    double steady_state_deflection = 0.0; ///< mean deflection, final 10% of trace [m]
    double deceleration_duration = 0.0; ///< contact to first upward zero crossing [s]

    bool has_contact() const;
};

/// Integrate the drop. Flight is ballistic; after the contact event (located
/// by bisection to 1e-9 s) the foot stays pinned and the pelvis obeys
///   m*y'' = -m*g + F_v(compression) - c*y'
/// with F_v from the statics closure. Classical fourth-order one-step
/// integration at fixed dt. Throws GeometryError when the pose leaves the
/// kinematic range of the leg.
DropTrace simulate_drop(const DropScenario& scenario);

struct DropMetrics {
    double peak_acceleration = 0.0;      ///< [m/s^2]
    double max_deflection = 0.0;         ///< [m]
    double steady_state_deflection = 0.0; ///< [m]
    double deceleration_duration = 0.0;  ///< [s]
};

/// Summary record of a landed trace. Throws NumericError when the trace has
/// no contact event.
DropMetrics drop_metrics(const DropTrace& trace);

/// Percent reduction of peak acceleration relative to a reference run:
/// 100 * (reference - other) / reference.
double peak_reduction_percent(const DropMetrics& reference, const DropMetrics& other);

} // namespace tensileg
