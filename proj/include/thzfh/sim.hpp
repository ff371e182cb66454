/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_SIM_HPP
#define THZFH_SIM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "thzfh/deployment.hpp"
#include "thzfh/ecpri.hpp"
#include "thzfh/planner.hpp"
#include "thzfh/se_model.hpp"
#include "thzfh/weather.hpp"

namespace thzfh {

struct SimConfig {
    double duration_s = 1.0;
    uint64_t seed = 1;
    Forwarding forwarding = Forwarding::store_and_forward;
    double per_hop_processing_s = 0.0;
    double latency_budget_s = 100e-6;
    double load_factor = 1.0;       // rho, scales frame size on the fixed symbol clock
    double uplink_fraction = 1.0;   // 1 = simplex uplink, 0 = simplex downlink
    double gen_jitter_fraction = 0.0;  // seeded jitter on generation ticks, off by default
    int ul_quant_bits = 0;          // 0 = same width as downlink

    void validate() const;
};

enum class FlowDirection { uplink, downlink };

/// Per-frame ledger entry. Times are integer picoseconds.
struct FrameRecord {
    uint64_t frame_id;
    std::string ru;
    FlowDirection direction;
    int64_t gen_time_ps;
    double size_bits;
    int64_t delivery_time_ps;               // -1 while in flight
    std::vector<int64_t> hop_departure_ps;  // end of serialization per hop
    bool budget_met;
};

struct LatencyStats {
    uint64_t frames_generated = 0;
    uint64_t frames_delivered = 0;
    uint64_t frames_in_flight = 0;
    double latency_mean_s = 0.0;
    double latency_p50_s = 0.0;
    double latency_p95_s = 0.0;
    double latency_p99_s = 0.0;
    double latency_max_s = 0.0;
    double budget_violation_fraction = 0.0;
    double outage_s = 0.0;
};

struct LinkStats {
    std::string key;  // "from->to"
    double utilization = 0.0;
    uint64_t max_queue_depth = 0;
};

struct SimMetrics {
    double duration_s = 0.0;
    LatencyStats aggregate;
    std::vector<std::pair<std::string, LatencyStats>> per_ru;  // deployment order
    std::vector<LinkStats> per_link;
    uint64_t max_queue_depth = 0;
};

struct SimResult {
    SimMetrics metrics;
    std::vector<FrameRecord> trace;  // empty unless requested
};

/// Event-driven transport of the isochronous IQ frame streams over every
/// chain, under the planner's clear-sky rates and the weather timelines.
/// Deterministic: identical inputs and seed give identical results.
SimResult run(const Deployment& deployment, const FronthaulParams& fronthaul,
              const RfParams& default_rf, const SpectralEfficiencyModel& se_model,
              const std::vector<WeatherProfile>& weather, BandwidthMode bandwidth_mode,
              const SimConfig& config, bool record_trace = false);

/// Independent latency oracle for the degenerate case the DES must agree
/// with: one RU, one hop, constant rate, no weather change, rho <= 1.
double closed_form_oracle_s(double distance_m, double link_rate_bps, double frame_bits,
                            double per_hop_processing_s);

}  // namespace thzfh

#endif
