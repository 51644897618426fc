#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace tensileg {

/// Uniformly sampled signal.
struct TimeSeries {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<double> values;
    std::string label;      ///< channel name
    std::string unit;       ///< channel unit
    bool resampled = false; ///< true when ingestion interpolated non-uniform stamps

    std::size_t size() const { return values.size(); }
    double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
};

/// First or second derivative by symmetric stencils on interior points and
/// second-order one-sided stencils at the ends. Output length equals input
/// length. Requires at least 3 samples.
TimeSeries central_difference(const TimeSeries& series, int order);

/// Center-point convolution weights of the Savitzky-Golay filter, length
/// `window`. Exposed so the variance gain (sum of squared weights) can be
/// checked against measured noise reduction.
std::vector<double> savitzky_golay_kernel(int window, int poly_order);

/// Least-squares polynomial smoothing. Window must be odd and the polynomial
/// order at most (window-1)/2 so that the truncated one-sided edge windows
/// still determine the fit; polynomials up to the fit order pass through
/// unchanged, edges included.
TimeSeries savitzky_golay(const TimeSeries& series, int window, int poly_order);

/// Discrete low-pass from the analog Butterworth prototype via bilinear
/// transform with frequency pre-warping, applied as cascaded second-order
/// sections. zero_phase runs forward and backward passes (squared magnitude,
/// no phase lag). Cutoff must lie below Nyquist.
TimeSeries butterworth_lowpass(const TimeSeries& series, double cutoff_hz, int order,
                               bool zero_phase);

/// One second-order section of a discrete filter,
/// H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2).
struct Biquad {
    double b0, b1, b2, a1, a2;
};

/// Butterworth cascade coefficients (unity DC gain per section).
std::vector<Biquad> butterworth_sections(double cutoff_hz, double sample_rate_hz, int order);

/// Quadratic fit through the origin.
struct FitResult {
    double a = 0.0;         ///< quadratic coefficient [force/length^2]
    double b = 0.0;         ///< linear coefficient [force/length]
    double r_squared = 0.0; ///< 1 - SS_res/SS_tot, SS_tot about the mean of y
};

/// Least-squares fit of F(x) = a*x^2 + b*x (no intercept) via the 2x2 normal
/// equations. Throws NumericError for rank-deficient designs (fewer than two
/// distinct x values, or all x zero).
FitResult fit_unbiased_quadratic(std::span<const double> x, std::span<const double> y);

/// Two named numeric columns from a CSV file.
struct XYTable {
    std::vector<double> x;
    std::vector<double> y;
};

XYTable ingest_xy_csv(const std::filesystem::path& path, const std::string& x_column,
                      const std::string& y_column);

/// Time series from a CSV file. Non-uniform timestamps are resampled onto a
/// uniform grid by linear interpolation and flagged; timestamps must be
/// strictly increasing.
TimeSeries ingest_time_series_csv(const std::filesystem::path& path,
                                  const std::string& time_column,
                                  const std::string& value_column);

} // namespace tensileg
