/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "thzfh/units.hpp"

namespace thzfh {

const char* forwarding_name(Forwarding f) {
    return f == Forwarding::store_and_forward ? "store_and_forward" : "cut_through";
}

Forwarding forwarding_from_name(const std::string& name) {
    if (name == "store_and_forward") return Forwarding::store_and_forward;
    if (name == "cut_through") return Forwarding::cut_through;
    throw std::invalid_argument("unknown forwarding mode: " + name);
}

double multi_hop_latency_s(std::span<const double> hop_distances_m, double link_rate_bps,
                           double frame_bits, Forwarding forwarding,
                           double per_hop_processing_s) {
    if (hop_distances_m.empty()) {
        throw std::invalid_argument("hop chain must contain at least one hop");
    }
    check_positive(link_rate_bps, "link_rate_bps");
    check_positive(frame_bits, "frame_bits");
    check_non_negative(per_hop_processing_s, "per_hop_processing_s");

    const double serialization_s = frame_bits / link_rate_bps;
    double latency = (forwarding == Forwarding::cut_through) ? serialization_s : 0.0;
    for (double d : hop_distances_m) {
        check_positive(d, "hop distance");
        latency += d / kSpeedOfLight + per_hop_processing_s;
        if (forwarding == Forwarding::store_and_forward) {
            latency += serialization_s;
        }
    }
    return latency;
}

std::vector<HopState> chain_states(const Deployment& deployment, const RuLink& link,
                                   const RfParams& default_rf,
                                   const SpectralEfficiencyModel& se_model) {
    const ThzTransceiver* tr = deployment.find_transceiver(link.transceiver);
    if (!tr) {
        throw std::invalid_argument("unknown transceiver " + link.transceiver);
    }
    const RfParams& rf = tr->rf ? *tr->rf : default_rf;
    rf.validate();
    se_model.validate();

    std::vector<HopState> hops;
    hops.reserve(link.chain.size() - 1);
    double longest_hop = 0.0;
    for (size_t i = 0; i + 1 < link.chain.size(); ++i) {
        const Node* a = deployment.find_node(link.chain[i]);
        const Node* b = deployment.find_node(link.chain[i + 1]);
        if (!a || !b) {
            throw std::invalid_argument("chain for " + link.ru + " references unknown node");
        }
        HopState h;
        h.from = a->id;
        h.to = b->id;
        h.distance_m = node_distance_m(*a, *b);
        if (h.distance_m <= 0.0) {
            throw std::invalid_argument("zero-length hop " + a->id + "->" + b->id);
        }
        hops.push_back(h);
        longest_hop = std::max(longest_hop, h.distance_m);
    }

    // The radio's bandwidth is fixed once, via the equation-3 tradeoff at the
    // anchor distance; individual hops then see whatever CNR that bandwidth
    // leaves them. CNR shifts dB-linearly with received power, so the anchor
    // hop lands on design_cnr_db exactly.
    const double anchor_m = tr->design_distance_m.value_or(longest_hop);
    const double rx_anchor = received_power_dbm({rf, anchor_m});
    const double bandwidth_hz =
        max_bandwidth_for_cnr_hz(rx_anchor, tr->design_cnr_db,
                                 noise_spectral_density_mw_per_hz(rf.antenna_temperature_k,
                                                                  rf.rx_noise_figure_db));
    for (auto& h : hops) {
        h.rx_power_dbm = received_power_dbm({rf, h.distance_m});
        h.cnr_db = tr->design_cnr_db + (h.rx_power_dbm - rx_anchor);
        h.bandwidth_hz = bandwidth_hz;
        h.rate_bps = link.link_rate_override_bps
                         ? *link.link_rate_override_bps
                         : achievable_rate_bps(h.cnr_db, bandwidth_hz, se_model);
    }
    return hops;
}

FeasibilityReport plan(const Deployment& deployment, const FronthaulParams& fronthaul,
                       const RfParams& default_rf, const SpectralEfficiencyModel& se_model,
                       const PlanOptions& options) {
    deployment.validate();
    fronthaul.validate();
    check_positive(options.latency_budget_s, "latency_budget_s");
    check_non_negative(options.per_hop_processing_s, "per_hop_processing_s");

    const double required_bps = fronthaul_rate_dl_bps(fronthaul);
    const FrameModel frame = frame_model(fronthaul);

    FeasibilityReport report;
    report.latency_budget_s = options.latency_budget_s;
    report.feasible = true;

    std::vector<double> load(deployment.transceivers.size(), 0.0);

    for (const auto& link : deployment.links) {
        RuPlan rp;
        rp.ru = link.ru;
        rp.transceiver = link.transceiver;
        rp.required_rate_bps = required_bps;
        rp.hops = chain_states(deployment, link, default_rf, se_model);

        rp.distance_m = 0.0;
        rp.rx_power_dbm = std::numeric_limits<double>::infinity();
        rp.achievable_rate_bps = std::numeric_limits<double>::infinity();
        std::vector<double> distances;
        distances.reserve(rp.hops.size());
        for (const auto& h : rp.hops) {
            rp.distance_m += h.distance_m;
            rp.rx_power_dbm = std::min(rp.rx_power_dbm, h.rx_power_dbm);
            rp.achievable_rate_bps = std::min(rp.achievable_rate_bps, h.rate_bps);
            distances.push_back(h.distance_m);
        }
        rp.usable_bandwidth_hz = rp.hops.front().bandwidth_hz;
        rp.margin = rp.achievable_rate_bps > 0.0 ? rp.achievable_rate_bps / required_bps : 0.0;

        // Conservative bound: under ideal time-division sharing each RU is
        // granted exactly its required throughput, so frames serialize at
        // required_bps (one symbol period per frame), not at the peak rate.
        rp.latency_s = multi_hop_latency_s(distances, required_bps, frame.per_symbol_payload_bits,
                                           options.forwarding, options.per_hop_processing_s);

        size_t tr_index = 0;
        for (size_t i = 0; i < deployment.transceivers.size(); ++i) {
            if (deployment.transceivers[i].id == link.transceiver) tr_index = i;
        }
        load[tr_index] += rp.achievable_rate_bps > 0.0
                              ? required_bps / rp.achievable_rate_bps
                              : std::numeric_limits<double>::infinity();

        rp.feasible = rp.achievable_rate_bps >= required_bps &&
                      rp.latency_s <= options.latency_budget_s;
        report.rus.push_back(std::move(rp));
    }

    for (size_t i = 0; i < deployment.transceivers.size(); ++i) {
        report.transceivers.push_back({deployment.transceivers[i].id, load[i]});
    }
    for (auto& rp : report.rus) {
        for (const auto& tl : report.transceivers) {
            if (tl.id == rp.transceiver && tl.load > 1.0) rp.feasible = false;
        }
        report.feasible = report.feasible && rp.feasible;
    }
    return report;
}

std::vector<AntennaTradeoffPoint> antenna_tradeoff(
    const LinkBudgetInput& base, std::span<const std::pair<double, double>> gains_dbi,
    double cnr_db) {
    base.validate();
    const double noise = noise_spectral_density_mw_per_hz(base.rf.antenna_temperature_k,
                                                          base.rf.rx_noise_figure_db);
    std::vector<AntennaTradeoffPoint> out;
    out.reserve(gains_dbi.size());
    for (const auto& [tx_gain, rx_gain] : gains_dbi) {
        LinkBudgetInput variant = base;
        variant.rf.tx_antenna_gain_dbi = tx_gain;
        variant.rf.rx_antenna_gain_dbi = rx_gain;
        const double rx_power = received_power_dbm(variant);
        out.push_back({tx_gain, rx_gain, rx_power,
                       max_bandwidth_for_cnr_hz(rx_power, cnr_db, noise)});
    }
    return out;
}

}  // namespace thzfh
