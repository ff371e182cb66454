/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_UNITS_HPP
#define THZFH_UNITS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace thzfh {

// SI exact values
inline constexpr double kSpeedOfLight = 299792458.0;   // [m/s]
inline constexpr double kBoltzmann    = 1.380649e-23;  // [J/K]

/// 10^(x/10). Converts dB to a power ratio, or dBm to mW.
inline double db_to_linear(double x_db) {
    if (!std::isfinite(x_db)) {
        throw std::invalid_argument("db_to_linear: non-finite input");
    }
    return std::pow(10.0, x_db / 10.0);
}

/// 10*log10(x). Inverse of db_to_linear.
inline double linear_to_db(double ratio) {
    if (!std::isfinite(ratio) || ratio <= 0.0) {
        throw std::invalid_argument("linear_to_db: input must be finite and > 0");
    }
    return 10.0 * std::log10(ratio);
}

inline void check_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and > 0");
    }
}

inline void check_non_negative(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::invalid_argument(std::string(what) + " must be finite and >= 0");
    }
}

}  // namespace thzfh

#endif
