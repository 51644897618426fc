#pragma once

#include <optional>
#include <string>

namespace tensileg {

/// Geometry, friction and load of the pretension lead screw.
struct LeadScrewSpec {
    double mean_diameter = 0.008; ///< D_m [m]
    double lead = 0.004;          ///< L, axial travel per revolution [m/rev]
    double friction = 0.15;       ///< mu, dimensionless
    double axial_force = 320.0;   ///< F_axial [N]
    std::optional<double> motor_torque_available; ///< [N*m]
};

/// Raise/lower torque formula variant. The source method's printed Shigley
/// expression and its reported numbers disagree by exactly a factor of two;
/// both are computed so reports can carry both, never silently picking one.
enum class FormulaMode {
    Standard,   ///< literal evaluation of the printed expression, F*D_m/2 * (...)
    PaperCompat ///< half of Standard, reproducing the reported torque values
};

/// Total axial load on the screw from the pretensioned springs [N].
double axial_force_from_springs(double per_spring_force, int spring_count);

/// Lead angle lambda = atan(L / (pi * D_m)) [rad].
double lead_angle(const LeadScrewSpec& spec);

/// Torque to raise the load (tighten pretension) [N*m].
/// Throws GeometryError when pi*D_m - mu*L <= 0 (overhauling geometry).
double torque_raise(const LeadScrewSpec& spec, FormulaMode mode);

/// Torque to lower the load [N*m], signed as printed: numerator L - pi*mu*D_m.
/// A negative value means friction alone holds the load.
double torque_lower(const LeadScrewSpec& spec, FormulaMode mode);

struct SelfLockingVerdict {
    bool self_locking = false;
    double friction = 0.0;       ///< mu operand
    double tan_lead_angle = 0.0; ///< tan(lambda) operand
};

/// Strict criterion mu > tan(lambda); both operands are returned so reports
/// can surface marginal cases.
SelfLockingVerdict self_locking(const LeadScrewSpec& spec);

struct MotorFeasibility {
    double required_torque = 0.0;  ///< raise torque in the chosen mode [N*m]
    double available_torque = 0.0; ///< [N*m]
    double margin = 0.0;           ///< available / required
    bool feasible = false;
};

/// Throws ConfigError when the spec carries no motor torque.
MotorFeasibility motor_feasibility(const LeadScrewSpec& spec, FormulaMode mode);

/// Whether the screw holds the axial load with the motor unpowered.
enum class LoweringRegime { HoldsLoad, BackDrives };

/// Full dimensioning report for one screw spec: both formula modes side by
/// side, locking verdict with regime, and optional motor check.
struct DimensioningReport {
    LeadScrewSpec spec;
    double lead_angle_rad = 0.0;
    double raise_standard = 0.0;
    double raise_paper_compat = 0.0;
    double lower_standard = 0.0;      ///< signed, printed-formula convention
    double lower_paper_compat = 0.0;  ///< signed
    SelfLockingVerdict locking;
    LoweringRegime regime = LoweringRegime::BackDrives;
    std::string locking_note; ///< strict-criterion commentary for the report
    std::optional<MotorFeasibility> motor_standard;
    std::optional<MotorFeasibility> motor_paper_compat;
};

DimensioningReport dimension_leadscrew(const LeadScrewSpec& spec);

} // namespace tensileg
