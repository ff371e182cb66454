/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_WEATHER_HPP
#define THZFH_WEATHER_HPP

#include <string>
#include <vector>

#include "thzfh/link_budget.hpp"
#include "thzfh/planner.hpp"
#include "thzfh/se_model.hpp"

namespace thzfh {

struct WeatherSegment {
    double start_s = 0.0;
    std::string condition;                     // free-form label ("clear", "fog", ...)
    double specific_attenuation_db_per_km = 0.0;  // excess over the static budget
};

/// Piecewise-constant excess attenuation timeline. Segments are sorted,
/// non-overlapping and cover [0, horizon): each extends to the next start.
struct WeatherProfile {
    std::vector<WeatherSegment> segments;
    double horizon_s = 0.0;
    std::vector<std::string> applies_to;  // RU ids; empty = every RU

    void validate() const;
    const WeatherSegment& segment_at(double t_s) const;  // throws outside [0, horizon)
    /// Excess loss of the active segment over a path, linear in path length.
    double excess_loss_db_at(double t_s, double path_length_m) const;
};

/// Whether a weather change degrades CNR at the design bandwidth (a deployed
/// radio keeps its channel width) or re-runs the equation-3 tradeoff to
/// shrink the bandwidth at the design CNR.
enum class BandwidthMode { fixed, adaptive };

const char* bandwidth_mode_name(BandwidthMode mode);
BandwidthMode bandwidth_mode_from_name(const std::string& name);

struct LinkState {
    double start_s;
    double end_s;
    std::string condition;
    double rx_power_dbm;
    double bandwidth_hz;
    double rate_bps;
};

/// One entry per profile segment, computed through the link-budget chain with
/// the segment's excess loss added. A zero-attenuation segment reproduces the
/// static values bit-exactly.
std::vector<LinkState> link_state_timeline(const WeatherProfile& profile, double distance_m,
                                           const RfParams& rf,
                                           const SpectralEfficiencyModel& se_model,
                                           double design_cnr_db,
                                           BandwidthMode mode = BandwidthMode::fixed);

/// Same per-segment math applied on top of a precomputed static hop state
/// (used by the simulator, where the chain may anchor its bandwidth at a
/// different hop).
std::vector<LinkState> hop_timeline(const WeatherProfile& profile, const HopState& hop,
                                    const SpectralEfficiencyModel& se_model, BandwidthMode mode);

}  // namespace thzfh

#endif
