/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/experiments.hpp"

#include <array>

#include "thzfh/units.hpp"

namespace thzfh {

namespace {

const std::array<ExperimentRecord, 7> kExperiments = {{
    {"[21]", "80 nm InP HEMT", 290e9, 100e9, false, 54.0, "electronic", "simplex"},
    {"[22]", "35 nm InGaAs mHEMT", 300e9, 12.5e9, false, 645.0, "opto-electronic", "duplex"},
    {"[23]", "35 nm InGaAs mHEMT", 300e9, 32e9, false, 180.0, "electronic", "simplex"},
    {"[24]", "50 nm InGaAs mHEMT", 240e9, 96e9, false, 40.0, "electronic", "simplex"},
    {"[25]", "50 nm InGaAs mHEMT", 300e9, 102.4e9, false, 500.0, "opto-electronic", "simplex"},
    {"[26]", "WiFi 6 (IEEE 802.11ax)", 6e9, 9.6e9, false, 50.0, "electronic", "duplex"},
    // reported as an upper bound ("<1 Gbps"), kept with the bound flag set
    {"[10]", "3GPP 5G Rel. 15", 3.75e9, 1e9, true, 500.0, "electronic", "duplex"},
}};

}  // namespace

std::span<const ExperimentRecord> h_band_experiments() {
    return {kExperiments.data(), kExperiments.size()};
}

std::vector<ExperimentRecord> table2_check(double required_rate_bps, double max_distance_m) {
    check_positive(required_rate_bps, "required_rate_bps");
    check_positive(max_distance_m, "max_distance_m");
    std::vector<ExperimentRecord> out;
    for (const auto& rec : h_band_experiments()) {
        if (rec.data_rate_bps >= required_rate_bps && rec.distance_m >= max_distance_m) {
            out.push_back(rec);
        }
    }
    return out;
}

}  // namespace thzfh
