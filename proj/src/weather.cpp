/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/weather.hpp"

#include <cmath>
#include <stdexcept>

#include "thzfh/units.hpp"

namespace thzfh {

void WeatherProfile::validate() const {
    check_positive(horizon_s, "horizon_s");
    if (segments.empty()) {
        throw std::invalid_argument("weather profile needs at least one segment");
    }
    if (segments.front().start_s != 0.0) {
        throw std::invalid_argument("first weather segment must start at t = 0");
    }
    double prev = -1.0;
    for (const auto& seg : segments) {
        if (!std::isfinite(seg.start_s) || seg.start_s <= prev) {
            throw std::invalid_argument("weather segments must have strictly increasing starts");
        }
        if (seg.start_s >= horizon_s) {
            throw std::invalid_argument("weather segment starts at or beyond the horizon");
        }
        check_non_negative(seg.specific_attenuation_db_per_km, "specific_attenuation_db_per_km");
        prev = seg.start_s;
    }
}

const WeatherSegment& WeatherProfile::segment_at(double t_s) const {
    if (!std::isfinite(t_s) || t_s < 0.0 || t_s >= horizon_s) {
        throw std::invalid_argument("time outside the profile horizon");
    }
    const WeatherSegment* active = &segments.front();
    for (const auto& seg : segments) {
        if (seg.start_s <= t_s) active = &seg;
        else break;
    }
    return *active;
}

double WeatherProfile::excess_loss_db_at(double t_s, double path_length_m) const {
    check_positive(path_length_m, "path_length_m");
    return segment_at(t_s).specific_attenuation_db_per_km * (path_length_m / 1000.0);
}

const char* bandwidth_mode_name(BandwidthMode mode) {
    return mode == BandwidthMode::fixed ? "fixed" : "adaptive";
}

BandwidthMode bandwidth_mode_from_name(const std::string& name) {
    if (name == "fixed") return BandwidthMode::fixed;
    if (name == "adaptive") return BandwidthMode::adaptive;
    throw std::invalid_argument("unknown bandwidth mode: " + name);
}

std::vector<LinkState> hop_timeline(const WeatherProfile& profile, const HopState& hop,
                                    const SpectralEfficiencyModel& se_model, BandwidthMode mode) {
    profile.validate();
    se_model.validate();

    std::vector<LinkState> states;
    states.reserve(profile.segments.size());
    for (size_t i = 0; i < profile.segments.size(); ++i) {
        const auto& seg = profile.segments[i];
        const double weather_db =
            seg.specific_attenuation_db_per_km * (hop.distance_m / 1000.0);

        LinkState st;
        st.start_s = seg.start_s;
        st.end_s = (i + 1 < profile.segments.size()) ? profile.segments[i + 1].start_s
                                                     : profile.horizon_s;
        st.condition = seg.condition;
        st.rx_power_dbm = hop.rx_power_dbm - weather_db;
        if (weather_db == 0.0) {
            // exact static baseline, no round trip through the dB chain
            st.bandwidth_hz = hop.bandwidth_hz;
            st.rate_bps = hop.rate_bps;
        } else if (mode == BandwidthMode::fixed) {
            // channel width stays put, CNR absorbs the extra loss
            st.bandwidth_hz = hop.bandwidth_hz;
            st.rate_bps = achievable_rate_bps(hop.cnr_db - weather_db, st.bandwidth_hz, se_model);
        } else {
            // re-run the equation-3 tradeoff at the design CNR
            st.bandwidth_hz = hop.bandwidth_hz * db_to_linear(-weather_db);
            st.rate_bps = achievable_rate_bps(hop.cnr_db, st.bandwidth_hz, se_model);
        }
        states.push_back(std::move(st));
    }
    return states;
}

std::vector<LinkState> link_state_timeline(const WeatherProfile& profile, double distance_m,
                                           const RfParams& rf,
                                           const SpectralEfficiencyModel& se_model,
                                           double design_cnr_db, BandwidthMode mode) {
    check_positive(distance_m, "distance_m");
    rf.validate();

    HopState hop;
    hop.distance_m = distance_m;
    hop.rx_power_dbm = received_power_dbm({rf, distance_m});
    hop.cnr_db = design_cnr_db;
    hop.bandwidth_hz = max_bandwidth_for_cnr_hz(
        hop.rx_power_dbm, design_cnr_db,
        noise_spectral_density_mw_per_hz(rf.antenna_temperature_k, rf.rx_noise_figure_db));
    hop.rate_bps = achievable_rate_bps(design_cnr_db, hop.bandwidth_hz, se_model);
    return hop_timeline(profile, hop, se_model, mode);
}

}  // namespace thzfh
