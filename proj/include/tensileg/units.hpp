#pragma once

#include <numbers>

namespace tensileg {

/// Standard gravity [m/s^2].
inline constexpr double kGravity = 9.80665;

inline constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }
inline constexpr double mm_to_m(double mm) { return mm * 1e-3; }
inline constexpr double m_to_mm(double m) { return m * 1e3; }

} // namespace tensileg
