#pragma once

#include <numbers>

#include "transduce/units.hpp"

namespace transduce::constants {

// CODATA 2018.
inline constexpr units::Permittivity eps0{8.8541878128e-12};
inline constexpr units::Velocity c_light{2.99792458e8};

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace transduce::constants
