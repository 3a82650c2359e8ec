#pragma once

namespace finlink::phys {

// CODATA / exact SI values
inline constexpr double k_boltzmann  = 1.380649e-23;     // J/K
inline constexpr double q_elementary = 1.602176634e-19;  // C
inline constexpr double eps0         = 8.8541878128e-12; // F/m
inline constexpr double n_avogadro   = 6.02214076e23;    // 1/mol
inline constexpr double electron_volt = 1.602176634e-19; // J

} // namespace finlink::phys
