#pragma once

#include "tensileg/leadscrew.hpp"
#include "tensileg/leg.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tensileg {

/// Interpretation of unsuffixed length-valued config keys. Keys with an
/// explicit unit suffix (_mm, _deg, _kg, _hz, _s, _n, _nm) are never scaled.
enum class UnitSystem { Meters, Millimeters };

struct RotaryConfig {
    double pulley_radius = 0.05;    ///< [m]
    double spring_stiffness = 500.0; ///< k_s [N/m]
    double cable_stiffness = 100.0;  ///< k_c [N/m]
    double k_l = 450.0;              ///< [N/m]
    double k_q = 20000.0;            ///< [N/m^2]
    std::vector<double> pretension_forces_n = {0.0, 10.0, 20.0};
    double theta_max_rad = 1.0;
    int theta_samples = 101;
};

struct LeadScrewConfig {
    double mean_diameter = 0.008; ///< [m]
    double lead = 0.004;          ///< [m/rev]
    double friction = 0.15;
    double axial_force_n = 320.0;
    std::optional<double> motor_torque_nm = 0.45;
};

struct SizeConfig {
    double payload_mass_kg = 1.0;
    double safety_factor = 1.0;
};

struct CompressionConfig {
    double max_compression = 0.10; ///< [m]
    double step = 5e-4;            ///< [m]
    std::vector<double> settings_mm = {0.0, 20.0, 40.0};
};

struct DropConfig {
    double drop_height = 0.20; ///< [m]
    double added_mass_kg = 0.254;
    double integrator_dt_s = 1e-4;
    double sim_duration_s = 1.0;
    std::vector<double> settings_mm = {0.0, 20.0, 40.0};
};

struct AnalysisConfig {
    int sg_window = 21;
    int sg_poly_order = 3;
    int butterworth_order = 4;
    double butterworth_cutoff_hz = 40.0;
};

struct CharacterizeVariantConfig {
    std::string name;
    double cross_section_mm2 = 0.0;
    double pretension_percent = 0.0;
    std::filesystem::path rotation_csv;    ///< resolved relative to the config file
    std::filesystem::path compression_csv;
};

struct CharacterizeConfig {
    double arm_length = 0.310; ///< [m]
    std::vector<CharacterizeVariantConfig> variants;
};

/**
 * @brief Full tool configuration, parsed from a TOML-style key/value file.
 *
 * Parsing is strict: the whole file is consumed before any computation and
 * unknown keys are rejected with their line number. Every block defaults to
 * the prototype parameters, so an empty or absent file is a valid
 * configuration.
 */
struct ToolConfig {
    LegModel::Params leg;
    RotaryConfig rotary;
    LeadScrewConfig leadscrew;
    SizeConfig size;
    CompressionConfig compression;
    DropConfig drop;
    AnalysisConfig analysis;
    CharacterizeConfig characterize;

    static ToolConfig defaults() { return ToolConfig{}; }
    static ToolConfig load(const std::filesystem::path& path, UnitSystem units);

    /// Parse from text (tests); relative CSV paths resolve against base_dir.
    static ToolConfig parse(const std::string& text, UnitSystem units,
                            const std::filesystem::path& base_dir);

    LegModel make_leg_model() const { return LegModel(leg); }
    LeadScrewSpec make_leadscrew_spec() const;
};

} // namespace tensileg
