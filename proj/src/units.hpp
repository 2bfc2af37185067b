#pragma once

#include <numbers>

namespace spinprep {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// All internal frequencies and energies are angular (rad/s); user-facing
// files and the CLI speak plain kHz / Hz and convert at the boundary.
inline constexpr double khz_to_rad(double khz) { return two_pi * khz * 1e3; }
inline constexpr double rad_to_khz(double rad) { return rad / (two_pi * 1e3); }
inline constexpr double hz_to_rad(double hz) { return two_pi * hz; }
inline constexpr double rad_to_hz(double rad) { return rad / two_pi; }

inline constexpr double us_to_s(double us) { return us * 1e-6; }
inline constexpr double s_to_us(double s) { return s * 1e6; }

}  // namespace spinprep
