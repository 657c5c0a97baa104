#pragma once

#include <numbers>

namespace fda {

// Propagation speed is fixed at the round value 3e8 m/s; the bundled
// scenarios rely on the resulting round-number conventions (300 km <-> 1 ms).
inline constexpr double speed_of_light = 3.0e8;  // m/s

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

}  // namespace fda
