#pragma once

#include <span>
#include <string>
#include <vector>

namespace tensileg {

/// Tendon variant under test: cross-sectional area and fabrication
/// pre-tension level.
struct VariantLabel {
    double cross_section_mm2 = 0.0;
    double pretension_percent = 0.0;

    /// Stable text form used for reports and lexicographic tie-breaks.
    std::string text() const;
};

/// Tensile-machine record of the rotation test: grip distance h against
/// measured force, sampled while h decreases from the equilibrium pose.
struct RotationSample {
    double h = 0.0;     ///< grip distance [m]
    double force = 0.0; ///< machine force [N]
};

struct RotationTestRecord {
    double arm_length = 0.310; ///< l1 [m]
    std::vector<RotationSample> samples;
    VariantLabel label;
};

/// Coaxial compression record: displacement against measured force.
struct CompressionSample {
    double displacement = 0.0; ///< [m]
    double force = 0.0;        ///< [N]
};

struct CompressionTestRecord {
    std::vector<CompressionSample> samples;
    VariantLabel label;
};

struct RotationPoint {
    double phi_deg = 0.0; ///< joint angle [deg]
    double torque = 0.0;  ///< [N*m]
};

/// Convert (h, F) samples into a (phi, M) rotation curve, descending in phi.
/// The first sample's force is the gravity baseline and is subtracted, so the
/// first reduced torque is exactly zero. Out-of-range h raises a DomainError
/// naming the sample index.
std::vector<RotationPoint> reduce_rotation_test(const RotationTestRecord& record);

struct LinearFit {
    double stiffness = 0.0; ///< OLS slope [N/m]
    double intercept = 0.0; ///< [N]
    double r_squared = 0.0;
};

/// Ordinary least-squares line (with intercept) through the compression data.
LinearFit linear_compression_stiffness(const CompressionTestRecord& record);

/// All measurements of one variant. Ranking requires at least one rotation
/// and one compression record per variant.
struct VariantData {
    VariantLabel label;
    std::vector<RotationTestRecord> rotation_tests;
    std::vector<CompressionTestRecord> compression_tests;
};

struct VariantMetrics {
    VariantLabel label;
    double peak_rotation_torque = 0.0;  ///< max |M| over all rotation sweeps [N*m]
    double compression_stiffness = 0.0; ///< mean OLS slope over compression tests [N/m]
    double compression_r_squared = 0.0; ///< mean r-squared of those fits
    bool pareto_optimal = false; ///< no variant is at least as good on both metrics and
                                 ///< strictly better on one
};

/// Rank variants by ascending peak rotation torque, then descending
/// compression stiffness, then label text. The preferred variant (low
/// rotation resistance, high coaxial resistance) sorts first.
std::vector<VariantMetrics> compare_variants(std::span<const VariantData> variants);

} // namespace tensileg
