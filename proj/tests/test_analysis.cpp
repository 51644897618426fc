#include "tensileg/analysis.hpp"

#include "tensileg/csv.hpp"
#include "tensileg/errors.hpp"
#include "tensileg/springs.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>

using namespace tensileg;

namespace {

TimeSeries sampled(double dt, std::size_t n, const std::function<double(double)>& f) {
    TimeSeries series;
    series.dt = dt;
    series.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        series.values[i] = f(dt * static_cast<double>(i));
    }
    return series;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

} // namespace

TEST_CASE("central difference") {
    SUBCASE("second derivative exact on quadratics") {
        const auto series = sampled(0.01, 200, [](double t) { return t * t; });
        const auto acc = central_difference(series, 2);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            CHECK(acc.values[i] == doctest::Approx(2.0).epsilon(1e-10));
        }
    }
    SUBCASE("first derivative of a constant is zero") {
        const auto series = sampled(0.1, 50, [](double) { return 3.5; });
        const auto rate = central_difference(series, 1);
        for (double v : rate.values) {
            CHECK(v == 0.0);
        }
    }
    SUBCASE("first derivative of sin t within the truncation bound") {
        const auto series = sampled(1e-3, 5000, [](double t) { return std::sin(t); });
        const auto rate = central_difference(series, 1);
        for (std::size_t i = 1; i + 1 < rate.size(); ++i) {
            CHECK(std::abs(rate.values[i] - std::cos(rate.time_at(i))) < 1e-6);
        }
    }
    SUBCASE("second derivative composes from two first passes") {
        const auto series = sampled(1e-3, 2000, [](double t) { return std::sin(3.0 * t); });
        const auto direct = central_difference(series, 2);
        const auto twice = central_difference(central_difference(series, 1), 1);
        for (std::size_t i = 2; i + 2 < series.size(); ++i) {
            CHECK(std::abs(direct.values[i] - twice.values[i]) < 1e-9 * 9.0);
        }
    }
    SUBCASE("domain errors") {
        TimeSeries tiny;
        tiny.dt = 0.1;
        tiny.values = {1.0, 2.0};
        CHECK_THROWS_AS(central_difference(tiny, 1), DomainError);
        const auto series = sampled(0.1, 10, [](double t) { return t; });
        CHECK_THROWS_AS(central_difference(series, 3), DomainError);
    }
}

TEST_CASE("savitzky-golay filter") {
    SUBCASE("reproduces polynomials up to the fit order, edges included") {
        const auto cubic = [](double t) {
            return 1.0 + 2.0 * t - 0.7 * t * t + 0.3 * t * t * t;
        };
        const auto series = sampled(0.05, 120, cubic);
        const auto smoothed = savitzky_golay(series, 11, 3);
        for (std::size_t i = 0; i < series.size(); ++i) {
            CHECK(std::abs(smoothed.values[i] - series.values[i]) < 1e-10);
        }
    }
    SUBCASE("constant data unchanged") {
        const auto series = sampled(0.05, 60, [](double) { return -4.2; });
        const auto smoothed = savitzky_golay(series, 21, 3);
        for (std::size_t i = 0; i < series.size(); ++i) {
            CHECK(smoothed.values[i] == doctest::Approx(-4.2).epsilon(1e-12));
        }
    }
    SUBCASE("white-noise variance shrinks by the kernel power") {
        const auto kernel = savitzky_golay_kernel(11, 3);
        double gain = 0.0;
        for (double w : kernel) {
            gain += w * w;
        }
        std::mt19937 rng(99);
        std::normal_distribution<double> noise(0.0, 1.0);
        TimeSeries series;
        series.dt = 1.0;
        series.values.resize(100000);
        for (double& v : series.values) {
            v = noise(rng);
        }
        const auto smoothed = savitzky_golay(series, 11, 3);
        double variance = 0.0;
        for (std::size_t i = 5; i + 5 < smoothed.size(); ++i) {
            variance += smoothed.values[i] * smoothed.values[i];
        }
        variance /= static_cast<double>(smoothed.size() - 10);
        CHECK(variance == doctest::Approx(gain).epsilon(0.10));
    }
    SUBCASE("kernel weights sum to one") {
        for (int window : {5, 11, 21}) {
            const auto kernel = savitzky_golay_kernel(window, 2);
            double sum = 0.0;
            for (double w : kernel) {
                sum += w;
            }
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("invalid parameters rejected") {
        const auto series = sampled(0.05, 60, [](double t) { return t; });
        CHECK_THROWS_AS(savitzky_golay(series, 10, 3), DomainError); // even window
        CHECK_THROWS_AS(savitzky_golay(series, 11, -1), DomainError);
        CHECK_THROWS_AS(savitzky_golay(series, 11, 6), DomainError); // order > half
        CHECK_THROWS_AS(savitzky_golay(sampled(0.05, 5, [](double t) { return t; }), 11, 3),
                        DomainError); // series shorter than the window
    }
}

TEST_CASE("butterworth low-pass") {
    SUBCASE("unity DC gain") {
        const auto series = sampled(1e-3, 4000, [](double) { return 1.0; });
        for (bool zero_phase : {false, true}) {
            const auto filtered = butterworth_lowpass(series, 40.0, 4, zero_phase);
            CHECK(std::abs(filtered.values[series.size() / 2] - 1.0) < 1e-9);
            if (!zero_phase) {
                CHECK(std::abs(filtered.values.back() - 1.0) < 1e-9);
            }
        }
    }
    SUBCASE("-3 dB at the cutoff frequency") {
        const double cutoff = 40.0;
        const double omega = 2.0 * std::numbers::pi * cutoff;
        const auto series =
            sampled(1e-3, 8000, [&](double t) { return std::sin(omega * t); });
        const auto filtered = butterworth_lowpass(series, cutoff, 2, false);
        const double amplitude = oracles::sinusoid_amplitude(filtered.values, 1e-3, omega,
                                                             4000, 8000);
        CHECK(amplitude == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.01));
    }
    SUBCASE("stop-band attenuation at ten times the cutoff") {
        const double cutoff = 10.0;
        const double omega = 2.0 * std::numbers::pi * 10.0 * cutoff;
        const auto series =
            sampled(1e-3, 8000, [&](double t) { return std::sin(omega * t); });
        const auto filtered = butterworth_lowpass(series, cutoff, 4, false);
        const double amplitude = oracles::sinusoid_amplitude(filtered.values, 1e-3, omega,
                                                             4000, 8000);
        CHECK(20.0 * std::log10(1.0 / amplitude) >= 75.0);
    }
    SUBCASE("zero-phase pass keeps a symmetric pulse symmetric") {
        const std::size_t n = 4001;
        const double center = 2000.0 * 1e-3;
        const auto series = sampled(1e-3, n, [&](double t) {
            const double u = (t - center) / 0.05;
            return std::exp(-u * u);
        });
        const auto filtered = butterworth_lowpass(series, 30.0, 4, true);
        for (std::size_t i = 0; i < n / 2; ++i) {
            CHECK(std::abs(filtered.values[i] - filtered.values[n - 1 - i]) < 1e-8);
        }
    }
    SUBCASE("cutoff must stay below Nyquist") {
        const auto series = sampled(1e-3, 100, [](double t) { return t; });
        CHECK_THROWS_AS(butterworth_lowpass(series, 500.0, 2, false), DomainError);
        CHECK_THROWS_AS(butterworth_lowpass(series, 600.0, 2, false), DomainError);
        CHECK_THROWS_AS(butterworth_lowpass(series, 40.0, 0, false), DomainError);
    }
}

TEST_CASE("unbiased quadratic fit") {
    SUBCASE("exact recovery") {
        std::vector<double> x, y;
        for (int i = 0; i <= 60; ++i) {
            x.push_back(0.001 * i);
            y.push_back(20000.0 * x.back() * x.back() + 450.0 * x.back());
        }
        const auto fit = fit_unbiased_quadratic(x, y);
        CHECK(fit.a == doctest::Approx(20000.0).epsilon(1e-6));
        CHECK(fit.b == doctest::Approx(450.0).epsilon(1e-6));
        CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("all-zero response") {
        const std::vector<double> x = {0.0, 0.01, 0.02, 0.03};
        const std::vector<double> y = {0.0, 0.0, 0.0, 0.0};
        const auto fit = fit_unbiased_quadratic(x, y);
        CHECK(fit.a == 0.0);
        CHECK(fit.b == 0.0);
    }
    SUBCASE("staged spring bank is close to quadratic over its working range") {
        const std::array<double, 3> offsets = {0.0, 0.012, 0.036};
        const auto bank = parallel_slack_system(388.4, offsets);
        std::vector<double> x, y;
        for (int mm = 0; mm <= 50; ++mm) {
            x.push_back(1e-3 * mm);
            y.push_back(bank.force(x.back()));
        }
        const auto fit = fit_unbiased_quadratic(x, y);
        CHECK(fit.r_squared >= 0.99);
        CHECK(fit.a > 0.0);
        CHECK(fit.b > 0.0);
    }
    SUBCASE("noise degrades the fit monotonically") {
        std::mt19937 rng(4242);
        std::normal_distribution<double> unit_noise(0.0, 1.0);
        std::vector<double> x, clean;
        for (int i = 0; i <= 200; ++i) {
            x.push_back(0.00025 * i);
            clean.push_back(20000.0 * x.back() * x.back() + 450.0 * x.back());
        }
        double previous_r2 = 2.0;
        for (double amplitude : {0.0, 0.5, 5.0}) {
            std::vector<double> noisy = clean;
            std::mt19937 local(4242);
            for (double& v : noisy) {
                v += amplitude * unit_noise(local);
            }
            const double r2 = fit_unbiased_quadratic(x, noisy).r_squared;
            CHECK(r2 < previous_r2 + 1e-12);
            previous_r2 = r2;
        }
    }
    SUBCASE("rank errors") {
        const std::vector<double> same = {0.02, 0.02, 0.02};
        const std::vector<double> y = {1.0, 2.0, 3.0};
        CHECK_THROWS_AS(fit_unbiased_quadratic(same, y), NumericError);
        const std::vector<double> zeros = {0.0, 0.0, 0.0};
        CHECK_THROWS_AS(fit_unbiased_quadratic(zeros, y), NumericError);
        CHECK_THROWS_AS(fit_unbiased_quadratic(std::vector<double>{1.0}, {1.0}), DomainError);
    }
}

TEST_CASE("csv ingestion") {
    SUBCASE("uniform time series") {
        const auto path = temp_file("tensileg_uniform.csv",
                                    "t_s,y_m\n0,1\n0.001,2\n0.002,3\n0.003,4\n");
        const auto series = ingest_time_series_csv(path, "t_s", "y_m");
        CHECK(series.dt == doctest::Approx(0.001));
        CHECK(!series.resampled);
        CHECK(series.values == std::vector<double>{1.0, 2.0, 3.0, 4.0});
    }
    SUBCASE("non-numeric cell names its row") {
        const auto path = temp_file("tensileg_bad.csv",
                                    "t_s,y_m\n0,1\n0.001,2\n0.002,3\n0.003,4\n0.004,5\n"
                                    "0.005,oops\n");
        try {
            ingest_time_series_csv(path, "t_s", "y_m");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("row 7") != std::string::npos);
            CHECK(std::string(e.what()).find("y_m") != std::string::npos);
        }
    }
    SUBCASE("non-uniform stamps resampled, linear signals reproduced exactly") {
        std::string content = "t_s,y_m\n";
        const std::array<double, 6> stamps = {0.0, 0.9, 2.1, 3.0, 3.9, 5.1};
        for (double t : stamps) {
            content += format_double(t) + "," + format_double(3.0 * t + 1.0) + "\n";
        }
        const auto path = temp_file("tensileg_nonuniform.csv", content);
        const auto series = ingest_time_series_csv(path, "t_s", "y_m");
        CHECK(series.resampled);
        for (std::size_t i = 0; i < series.size(); ++i) {
            CHECK(series.values[i] ==
                  doctest::Approx(3.0 * series.time_at(i) + 1.0).epsilon(1e-12));
        }
    }
    SUBCASE("missing column") {
        const auto path = temp_file("tensileg_missing.csv", "a,b\n1,2\n");
        CHECK_THROWS_AS(ingest_xy_csv(path, "x_m", "b"), ConfigError);
    }
    SUBCASE("empty file") {
        const auto path = temp_file("tensileg_empty.csv", "");
        CHECK_THROWS_AS(ingest_xy_csv(path, "x", "y"), ConfigError);
    }
}
