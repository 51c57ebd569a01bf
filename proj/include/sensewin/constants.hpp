#pragma once

#include <stdexcept>

namespace sensewin {

// CODATA 2018 exact values.
inline constexpr double k_boltzmann = 1.380649e-23;    // J/K
inline constexpr double q_electron = 1.602176634e-19;  // C

/// Thermal voltage k_B*T/q in volts. T must be positive kelvin.
inline double thermal_voltage(double temperature_k) {
    if (!(temperature_k > 0.0)) {
        throw std::domain_error("thermal_voltage: temperature must be > 0 K");
    }
    return k_boltzmann * temperature_k / q_electron;
}

}  // namespace sensewin
