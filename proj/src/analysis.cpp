#include "tensileg/analysis.hpp"

#include "tensileg/csv.hpp"
#include "tensileg/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tensileg {

namespace {

// Least-squares polynomial fit over integer sample offsets, evaluated at
// offset `at`. Offsets are small integers, so the Vandermonde system is well
// conditioned for the orders accepted here.
double polyfit_value_at(std::span<const double> window_values, int first_offset, int poly_order,
                        int at) {
    const auto n = static_cast<Eigen::Index>(window_values.size());
    const Eigen::Index terms = poly_order + 1;
    Eigen::MatrixXd design(n, terms);
    Eigen::VectorXd rhs(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double offset = static_cast<double>(first_offset + i);
        double power = 1.0;
        for (Eigen::Index j = 0; j < terms; ++j) {
            design(i, j) = power;
            power *= offset;
        }
        rhs(i) = window_values[static_cast<std::size_t>(i)];
    }
    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(rhs);
    double value = 0.0;
    double power = 1.0;
    for (Eigen::Index j = 0; j < terms; ++j) {
        value += coeffs(j) * power;
        power *= static_cast<double>(at);
    }
    return value;
}

void apply_biquad(const Biquad& section, std::vector<double>& signal) {
    double z1 = 0.0;
    double z2 = 0.0; // transposed direct form II, zero initial conditions
    for (double& sample : signal) {
        const double x = sample;
        const double y = section.b0 * x + z1;
        z1 = section.b1 * x - section.a1 * y + z2;
        z2 = section.b2 * x - section.a2 * y;
        sample = y;
    }
}

void run_cascade(const std::vector<Biquad>& sections, std::vector<double>& signal) {
    for (const auto& section : sections) {
        apply_biquad(section, signal);
    }
}

} // namespace

TimeSeries central_difference(const TimeSeries& series, int order) {
    if (order != 1 && order != 2) {
        throw DomainError("derivative order must be 1 or 2");
    }
    const std::size_t n = series.size();
    if (n < 3) {
        throw DomainError("central difference needs at least 3 samples");
    }
    if (!(series.dt > 0.0)) {
        throw DomainError("time series dt must be positive");
    }
    const auto& v = series.values;
    const double dt = series.dt;

    TimeSeries out = series;
    out.label = series.label.empty() ? "" : series.label + (order == 1 ? "_dot" : "_ddot");
    out.unit = series.unit.empty() ? "" : series.unit + (order == 1 ? "/s" : "/s^2");
    if (order == 1) {
        out.values[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * dt);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            out.values[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
        }
        out.values[n - 1] = (3.0 * v[n - 1] - 4.0 * v[n - 2] + v[n - 3]) / (2.0 * dt);
    } else {
        const double dt2 = dt * dt;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            out.values[i] = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / dt2;
        }
        if (n >= 4) {
            out.values[0] = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / dt2;
            out.values[n - 1] =
                (2.0 * v[n - 1] - 5.0 * v[n - 2] + 4.0 * v[n - 3] - v[n - 4]) / dt2;
        } else {
            // Three samples: the symmetric stencil is all that exists.
            out.values[0] = (v[0] - 2.0 * v[1] + v[2]) / dt2;
            out.values[n - 1] = out.values[0];
        }
    }
    return out;
}

std::vector<double> savitzky_golay_kernel(int window, int poly_order) {
    if (window < 1 || window % 2 == 0) {
        throw DomainError("Savitzky-Golay window must be odd and positive");
    }
    const int half = (window - 1) / 2;
    if (poly_order < 0 || poly_order > half) {
        throw DomainError("Savitzky-Golay order must lie in [0, (window-1)/2]");
    }
    // Row of the least-squares hat matrix for the center sample: evaluate the
    // fit at offset 0 with each basis vector in turn.
    std::vector<double> kernel(static_cast<std::size_t>(window));
    std::vector<double> basis(static_cast<std::size_t>(window), 0.0);
    for (int j = 0; j < window; ++j) {
        basis[static_cast<std::size_t>(j)] = 1.0;
        kernel[static_cast<std::size_t>(j)] = polyfit_value_at(basis, -half, poly_order, 0);
        basis[static_cast<std::size_t>(j)] = 0.0;
    }
    return kernel;
}

TimeSeries savitzky_golay(const TimeSeries& series, int window, int poly_order) {
    const auto kernel = savitzky_golay_kernel(window, poly_order); // validates params
    const int half = (window - 1) / 2;
    const std::size_t n = series.size();
    if (n < static_cast<std::size_t>(window)) {
        throw DomainError("series shorter than the Savitzky-Golay window");
    }
    TimeSeries out = series;
    for (std::size_t i = 0; i < n; ++i) {
        const auto index = static_cast<long>(i);
        const long first = std::max<long>(0, index - half);
        const long last = std::min<long>(static_cast<long>(n) - 1, index + half);
        if (last - first + 1 == window) {
            double acc = 0.0;
            for (int j = 0; j < window; ++j) {
                acc += kernel[static_cast<std::size_t>(j)] *
                       series.values[static_cast<std::size_t>(first + j)];
            }
            out.values[i] = acc;
        } else {
            // Truncated one-sided window near the edges, same polynomial order.
            const std::span<const double> window_values(series.values.data() + first,
                                                        static_cast<std::size_t>(last - first + 1));
            out.values[i] = polyfit_value_at(window_values, static_cast<int>(first - index),
                                             poly_order, 0);
        }
    }
    return out;
}

std::vector<Biquad> butterworth_sections(double cutoff_hz, double sample_rate_hz, int order) {
    if (order < 1) {
        throw DomainError("Butterworth order must be >= 1");
    }
    if (!(sample_rate_hz > 0.0) || !(cutoff_hz > 0.0) || cutoff_hz >= 0.5 * sample_rate_hz) {
        throw DomainError("cutoff must lie in (0, Nyquist)");
    }
    // Pre-warped analog cutoff; the bilinear map s = (1 - z^-1)/(1 + z^-1)
    // then lands the -3 dB point exactly on cutoff_hz.
    const double warped = std::tan(std::numbers::pi * cutoff_hz / sample_rate_hz);
    const double w2 = warped * warped;

    std::vector<Biquad> sections;
    for (int k = 1; 2 * k <= order; ++k) {
        // Conjugate pole pair of the unit-cutoff prototype:
        // s^2 + 2*sin(psi)*s + 1 with psi = (2k-1)*pi/(2n).
        const double psi = (2.0 * k - 1.0) * std::numbers::pi / (2.0 * order);
        const double alpha = 2.0 * std::sin(psi) * warped;
        const double a0 = 1.0 + alpha + w2;
        sections.push_back(Biquad{w2 / a0, 2.0 * w2 / a0, w2 / a0, 2.0 * (w2 - 1.0) / a0,
                                  (1.0 - alpha + w2) / a0});
    }
    if (order % 2 == 1) {
        // Real pole at -1 of the prototype maps to a first-order section.
        const double a0 = 1.0 + warped;
        sections.push_back(Biquad{warped / a0, warped / a0, 0.0, (warped - 1.0) / a0, 0.0});
    }
    return sections;
}

TimeSeries butterworth_lowpass(const TimeSeries& series, double cutoff_hz, int order,
                               bool zero_phase) {
    if (!(series.dt > 0.0)) {
        throw DomainError("time series dt must be positive");
    }
    const double sample_rate = 1.0 / series.dt;
    const auto sections = butterworth_sections(cutoff_hz, sample_rate, order);

    TimeSeries out = series;
    run_cascade(sections, out.values);
    if (zero_phase) {
        std::reverse(out.values.begin(), out.values.end());
        run_cascade(sections, out.values);
        std::reverse(out.values.begin(), out.values.end());
    }
    return out;
}

FitResult fit_unbiased_quadratic(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw DomainError("x and y lengths differ");
    }
    if (x.size() < 2) {
        throw DomainError("fit needs at least 2 samples");
    }
    bool two_distinct = false;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != x[0]) {
            two_distinct = true;
        }
        if (x[i] != 0.0) {
            any_nonzero = true;
        }
    }
    if (!two_distinct || !any_nonzero) {
        throw NumericError("rank-deficient design: need two distinct x values, not all zero");
    }

    double s4 = 0.0, s3 = 0.0, s2 = 0.0, sx2y = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi = x[i];
        const double x2 = xi * xi;
        s2 += x2;
        s3 += x2 * xi;
        s4 += x2 * x2;
        sx2y += x2 * y[i];
        sxy += xi * y[i];
    }
    const double det = s4 * s2 - s3 * s3;
    if (!(std::abs(det) > 1e-300)) {
        throw NumericError("rank-deficient design: singular normal equations");
    }
    FitResult fit;
    fit.a = (sx2y * s2 - sxy * s3) / det;
    fit.b = (sxy * s4 - sx2y * s3) / det;

    double mean = 0.0;
    for (double yi : y) {
        mean += yi;
    }
    mean /= static_cast<double>(y.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.a * x[i] * x[i] + fit.b * x[i]);
        ss_res += r * r;
        const double d = y[i] - mean;
        ss_tot += d * d;
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
    return fit;
}

XYTable ingest_xy_csv(const std::filesystem::path& path, const std::string& x_column,
                      const std::string& y_column) {
    const CsvTable table = read_csv(path);
    return XYTable{table.column(x_column), table.column(y_column)};
}

TimeSeries ingest_time_series_csv(const std::filesystem::path& path,
                                  const std::string& time_column,
                                  const std::string& value_column) {
    const CsvTable table = read_csv(path);
    const auto& t = table.column(time_column);
    const auto& v = table.column(value_column);
    if (t.size() < 2) {
        throw ConfigError(path.string() + ": need at least 2 samples");
    }
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (!(t[i] > t[i - 1])) {
            throw ConfigError(path.string() + ": row " + std::to_string(i + 2) +
                              ": timestamps must be strictly increasing");
        }
    }
    const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);

    TimeSeries series;
    series.t0 = t.front();
    series.dt = dt;
    series.label = value_column;

    double max_dev = 0.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
        max_dev = std::max(max_dev, std::abs((t[i] - t[i - 1]) - dt));
    }
    if (max_dev <= 1e-6 * dt) {
        series.values = v;
        return series;
    }

    // Non-uniform stamps: resample onto the uniform grid by linear interpolation.
    series.resampled = true;
    series.values.resize(t.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double ti = series.t0 + dt * static_cast<double>(i);
        while (seg + 2 < t.size() && t[seg + 1] < ti) {
            ++seg;
        }
        const double span = t[seg + 1] - t[seg];
        const double w = std::clamp((ti - t[seg]) / span, 0.0, 1.0);
        series.values[i] = v[seg] + w * (v[seg + 1] - v[seg]);
    }
    return series;
}

} // namespace tensileg
