#pragma once

#include <numbers>

namespace optosq::constants {

// CODATA 2018. hbar and k_B are exact in the 2019 SI; c is exact by definition.
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double c = 299792458.0;         // m/s

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace optosq::constants
