#include "tensileg/leadscrew.hpp"

#include "tensileg/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace tensileg {

namespace {

void validate(const LeadScrewSpec& spec) {
    if (!(spec.mean_diameter > 0.0)) {
        throw DomainError("mean diameter must be positive");
    }
    if (!(spec.lead > 0.0)) {
        throw DomainError("lead must be positive");
    }
    if (spec.friction < 0.0 || spec.friction >= 1.0) {
        throw DomainError("friction coefficient must be in [0, 1)");
    }
    if (spec.axial_force < 0.0) {
        throw DomainError("axial force must be >= 0");
    }
}

double mode_factor(FormulaMode mode) {
    return mode == FormulaMode::PaperCompat ? 0.5 : 1.0;
}

} // namespace

double axial_force_from_springs(double per_spring_force, int spring_count) {
    if (per_spring_force < 0.0) {
        throw DomainError("per-spring force must be >= 0");
    }
    if (spring_count < 1) {
        throw DomainError("spring count must be >= 1");
    }
    return per_spring_force * spring_count;
}

double lead_angle(const LeadScrewSpec& spec) {
    validate(spec);
    return std::atan(spec.lead / (std::numbers::pi * spec.mean_diameter));
}

double torque_raise(const LeadScrewSpec& spec, FormulaMode mode) {
    validate(spec);
    const double pi_dm = std::numbers::pi * spec.mean_diameter;
    const double denominator = pi_dm - spec.friction * spec.lead;
    if (denominator <= 0.0) {
        throw GeometryError("pi*D_m - mu*L <= 0: raise formula leaves its valid regime");
    }
    const double torque = 0.5 * spec.axial_force * spec.mean_diameter *
                          (spec.lead + std::numbers::pi * spec.friction * spec.mean_diameter) /
                          denominator;
    return mode_factor(mode) * torque;
}

double torque_lower(const LeadScrewSpec& spec, FormulaMode mode) {
    validate(spec);
    const double pi_dm = std::numbers::pi * spec.mean_diameter;
    const double torque = 0.5 * spec.axial_force * spec.mean_diameter *
                          (spec.lead - std::numbers::pi * spec.friction * spec.mean_diameter) /
                          (pi_dm + spec.friction * spec.lead);
    return mode_factor(mode) * torque;
}

SelfLockingVerdict self_locking(const LeadScrewSpec& spec) {
    validate(spec);
    const double tan_lambda = spec.lead / (std::numbers::pi * spec.mean_diameter);
    return SelfLockingVerdict{spec.friction > tan_lambda, spec.friction, tan_lambda};
}

MotorFeasibility motor_feasibility(const LeadScrewSpec& spec, FormulaMode mode) {
    if (!spec.motor_torque_available.has_value()) {
        throw ConfigError("motor torque not configured for feasibility check");
    }
    const double required = torque_raise(spec, mode);
    const double available = *spec.motor_torque_available;
    MotorFeasibility result;
    result.required_torque = required;
    result.available_torque = available;
    result.margin = required > 0.0 ? available / required
                                   : std::numeric_limits<double>::infinity();
    result.feasible = available >= required;
    return result;
}

DimensioningReport dimension_leadscrew(const LeadScrewSpec& spec) {
    DimensioningReport report;
    report.spec = spec;
    report.lead_angle_rad = lead_angle(spec);
    report.raise_standard = torque_raise(spec, FormulaMode::Standard);
    report.raise_paper_compat = torque_raise(spec, FormulaMode::PaperCompat);
    report.lower_standard = torque_lower(spec, FormulaMode::Standard);
    report.lower_paper_compat = torque_lower(spec, FormulaMode::PaperCompat);
    report.locking = self_locking(spec);
    report.regime = report.locking.self_locking ? LoweringRegime::HoldsLoad
                                                : LoweringRegime::BackDrives;
    const double tan_lambda = report.locking.tan_lead_angle;
    const bool marginal = tan_lambda > 0.0 &&
                          std::abs(spec.friction - tan_lambda) < 0.1 * tan_lambda;
    if (report.locking.self_locking) {
        report.locking_note =
            "self-locking by the strict criterion mu > tan(lambda); the screw holds the "
            "axial load without motor torque";
    } else {
        report.locking_note =
            "NOT self-locking by the strict criterion mu > tan(lambda); under full load "
            "the mechanism back-drives and requires holding torque from the screw drive";
    }
    if (marginal) {
        report.locking_note +=
            ". Marginal case: mu lies within 10% of tan(lambda), so quoted friction "
            "tables can flip this verdict either way; the strict inequality decides here";
    }
    if (spec.motor_torque_available.has_value()) {
        report.motor_standard = motor_feasibility(spec, FormulaMode::Standard);
        report.motor_paper_compat = motor_feasibility(spec, FormulaMode::PaperCompat);
    }
    return report;
}

} // namespace tensileg
