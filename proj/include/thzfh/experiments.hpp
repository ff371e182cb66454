/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_EXPERIMENTS_HPP
#define THZFH_EXPERIMENTS_HPP

#include <span>
#include <string>
#include <vector>

namespace thzfh {

/// One published H-band (or reference-technology) over-the-air throughput
/// demonstration, as reported by its authors.
struct ExperimentRecord {
    std::string reference;           // citation tag of the original experiment
    std::string technology;
    double center_frequency_hz;
    double data_rate_bps;
    bool rate_is_upper_bound;        // "<X" reported instead of a point value
    double distance_m;
    std::string signal_generation;   // "electronic" | "opto-electronic"
    std::string architecture;        // "simplex" | "duplex"
};

/// The bundled dataset (also shipped as data/h_band_experiments.json).
std::span<const ExperimentRecord> h_band_experiments();

/// Records demonstrating at least the required rate over at least the
/// required distance.
std::vector<ExperimentRecord> table2_check(double required_rate_bps, double max_distance_m);

}  // namespace thzfh

#endif
