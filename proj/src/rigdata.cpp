#include "tensileg/rigdata.hpp"

#include "tensileg/csv.hpp"
#include "tensileg/errors.hpp"
#include "tensileg/leg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace tensileg {

std::string VariantLabel::text() const {
    return format_double(cross_section_mm2) + "mm2_" + format_double(pretension_percent) +
           "pct";
}

std::vector<RotationPoint> reduce_rotation_test(const RotationTestRecord& record) {
    if (record.samples.empty()) {
        throw DomainError("rotation record has no samples");
    }
    const double baseline = record.samples.front().force;
    std::vector<RotationPoint> curve;
    curve.reserve(record.samples.size());
    for (std::size_t i = 0; i < record.samples.size(); ++i) {
        const auto& sample = record.samples[i];
        double phi;
        try {
            phi = phi_from_h(sample.h, record.arm_length);
        } catch (const DomainError& e) {
            throw DomainError("rotation sample " + std::to_string(i) + ": " + e.what());
        }
        curve.push_back(RotationPoint{rad_to_deg(phi),
                                      rig_torque(sample.force - baseline,
                                                 record.arm_length, phi)});
    }
    std::stable_sort(curve.begin(), curve.end(),
                     [](const RotationPoint& a, const RotationPoint& b) {
                         return a.phi_deg > b.phi_deg;
                     });
    return curve;
}

LinearFit linear_compression_stiffness(const CompressionTestRecord& record) {
    const auto& samples = record.samples;
    if (samples.size() < 2) {
        throw DomainError("compression record needs at least 2 samples");
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& s : samples) {
        sx += s.displacement;
        sy += s.force;
        sxx += s.displacement * s.displacement;
        sxy += s.displacement * s.force;
    }
    const auto n = static_cast<double>(samples.size());
    const double det = n * sxx - sx * sx;
    if (!(std::abs(det) > 1e-300)) {
        throw NumericError("rank-deficient compression data: all displacements equal");
    }
    LinearFit fit;
    fit.stiffness = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.stiffness * sx) / n;

    const double mean = sy / n;
    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& s : samples) {
        const double r = s.force - (fit.stiffness * s.displacement + fit.intercept);
        ss_res += r * r;
        ss_tot += (s.force - mean) * (s.force - mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

std::vector<VariantMetrics> compare_variants(std::span<const VariantData> variants) {
    if (variants.empty()) {
        throw DomainError("no variants to compare");
    }
    std::vector<VariantMetrics> metrics;
    metrics.reserve(variants.size());
    for (const auto& variant : variants) {
        if (variant.rotation_tests.empty() || variant.compression_tests.empty()) {
            throw ConfigError("variant " + variant.label.text() +
                              " is incomplete: needs at least one rotation and one "
                              "compression record");
        }
        VariantMetrics m;
        m.label = variant.label;
        for (const auto& rotation : variant.rotation_tests) {
            for (const auto& point : reduce_rotation_test(rotation)) {
                m.peak_rotation_torque = std::max(m.peak_rotation_torque,
                                                  std::abs(point.torque));
            }
        }
        double slope_sum = 0.0;
        double r2_sum = 0.0;
        for (const auto& compression : variant.compression_tests) {
            const LinearFit fit = linear_compression_stiffness(compression);
            slope_sum += fit.stiffness;
            r2_sum += fit.r_squared;
        }
        const auto tests = static_cast<double>(variant.compression_tests.size());
        m.compression_stiffness = slope_sum / tests;
        m.compression_r_squared = r2_sum / tests;
        metrics.push_back(std::move(m));
    }

    for (auto& candidate : metrics) {
        candidate.pareto_optimal = true;
        for (const auto& other : metrics) {
            const bool as_good = other.peak_rotation_torque <= candidate.peak_rotation_torque &&
                                 other.compression_stiffness >= candidate.compression_stiffness;
            const bool strictly_better =
                other.peak_rotation_torque < candidate.peak_rotation_torque ||
                other.compression_stiffness > candidate.compression_stiffness;
            if (as_good && strictly_better) {
                candidate.pareto_optimal = false;
                break;
            }
        }
    }

    std::sort(metrics.begin(), metrics.end(), [](const VariantMetrics& a,
                                                 const VariantMetrics& b) {
        return std::make_tuple(a.peak_rotation_torque, -a.compression_stiffness,
                               a.label.text()) <
               std::make_tuple(b.peak_rotation_torque, -b.compression_stiffness,
                               b.label.text());
    });
    return metrics;
}

} // namespace tensileg
