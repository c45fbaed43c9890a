#pragma once

namespace mwgates {

// Magnetic flux quantum h/2e in webers.
inline constexpr double kPhi0 = 2.067833848e-15;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

} // namespace mwgates
