/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_PLANNER_HPP
#define THZFH_PLANNER_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thzfh/deployment.hpp"
#include "thzfh/ecpri.hpp"
#include "thzfh/link_budget.hpp"
#include "thzfh/se_model.hpp"

namespace thzfh {

enum class Forwarding { store_and_forward, cut_through };

const char* forwarding_name(Forwarding f);
Forwarding forwarding_from_name(const std::string& name);

struct PlanOptions {
    double latency_budget_s = 100e-6;
    Forwarding forwarding = Forwarding::store_and_forward;
    double per_hop_processing_s = 0.0;
};

/// Static per-hop RF state at clear sky.
struct HopState {
    std::string from;
    std::string to;
    double distance_m;
    double rx_power_dbm;
    double cnr_db;        // at the transceiver's design bandwidth
    double bandwidth_hz;  // shared along the chain
    double rate_bps;      // achievable through the SE model (0 = link down)
};

struct RuPlan {
    std::string ru;
    std::string transceiver;
    double required_rate_bps;
    double distance_m;          // total chain length
    double rx_power_dbm;        // bottleneck (minimum) hop value
    double usable_bandwidth_hz;
    double achievable_rate_bps;  // minimum over hops
    double margin;               // achievable / required, 0 for a dead link
    double latency_s;            // one-way, serialized at the required rate
    bool feasible;
    std::vector<HopState> hops;
};

struct TransceiverLoad {
    std::string id;
    double load;  // sum of required/achievable over assigned RUs; +inf on a dead link
};

struct FeasibilityReport {
    std::vector<RuPlan> rus;                  // in deployment link order
    std::vector<TransceiverLoad> transceivers;  // in deployment order
    double latency_budget_s;
    bool feasible;
};

/// Closed-form one-way latency over a hop chain.
/// store_and_forward: sum over hops of (frame/rate + d/c + processing);
/// cut_through: one serialization plus the per-hop propagation/processing sum.
double multi_hop_latency_s(std::span<const double> hop_distances_m, double link_rate_bps,
                           double frame_bits, Forwarding forwarding,
                           double per_hop_processing_s);

/// Static feasibility analysis: link budget over the geometry, achievable vs
/// required rate, ideal time-division transceiver sharing, latency bound.
FeasibilityReport plan(const Deployment& deployment, const FronthaulParams& fronthaul,
                       const RfParams& default_rf, const SpectralEfficiencyModel& se_model,
                       const PlanOptions& options = {});

/// Static hop chain for one RU (also the clear-sky baseline for the weather
/// timeline and the simulator's link rates). Honors link_rate_override_bps.
std::vector<HopState> chain_states(const Deployment& deployment, const RuLink& link,
                                   const RfParams& default_rf,
                                   const SpectralEfficiencyModel& se_model);

struct AntennaTradeoffPoint {
    double tx_gain_dbi;
    double rx_gain_dbi;
    double rx_power_dbm;
    double bandwidth_hz;  // equation-3 bandwidth at the fixed CNR
};

/// Recomputes received power and usable bandwidth for alternative antenna
/// gain pairs at a fixed CNR (directivity vs coverage tradeoff).
std::vector<AntennaTradeoffPoint> antenna_tradeoff(
    const LinkBudgetInput& base, std::span<const std::pair<double, double>> gains_dbi,
    double cnr_db);

}  // namespace thzfh

#endif
