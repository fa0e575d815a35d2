#pragma once

namespace hfsas::phys {

// CODATA 2018 exact / recommended values (SI).
inline constexpr double c = 299792458.0;            // m/s
inline constexpr double h = 6.62607015e-34;         // J s
inline constexpr double hbar = 1.054571817e-34;     // J s
inline constexpr double eps0 = 8.8541878128e-12;    // F/m
inline constexpr double k_B = 1.380649e-23;         // J/K
inline constexpr double amu = 1.66053906660e-27;    // kg

} // namespace hfsas::phys
