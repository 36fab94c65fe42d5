#pragma once

namespace iongate {

// CODATA 2018 values, SI units.
inline constexpr double kHbar = 1.054571817e-34;          // J s
inline constexpr double kPlanck = 6.62607015e-34;         // J s
inline constexpr double kSpeedOfLight = 2.99792458e8;     // m / s
inline constexpr double kEpsilon0 = 8.8541878128e-12;     // F / m
inline constexpr double kBohrMagneton = 9.2740100783e-24; // J / T
inline constexpr double kAmu = 1.66053906660e-27;         // kg
inline constexpr double kElectronMassAmu = 5.48579909065e-4;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Angular frequency from a value quoted in GHz / MHz (ordinary frequency).
inline constexpr double from_ghz(double f) { return kTwoPi * f * 1e9; }
inline constexpr double from_mhz(double f) { return kTwoPi * f * 1e6; }
inline constexpr double to_ghz(double w) { return w / (kTwoPi * 1e9); }
inline constexpr double to_mhz(double w) { return w / (kTwoPi * 1e6); }

inline constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
inline constexpr double rad_to_deg(double r) { return r * 180.0 / kPi; }

} // namespace iongate
