/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "thzfh/link_budget.hpp"

namespace thzfh {

using nlohmann::ordered_json;

double round_sig(double value, int digits) {
    if (value == 0.0 || !std::isfinite(value)) return value;
    const double magnitude = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(
                                                             std::log10(std::fabs(value)))));
    return std::round(value * magnitude) / magnitude;
}

namespace {

ordered_json num(double v) {
    // JSON has no infinity; a dead link's infinite load serializes as a string
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return round_sig(v);
}

}  // namespace

ordered_json budget_report_json(const RfSection& rf) {
    if (!rf.distance_m) {
        throw std::invalid_argument("rf section has no distance_m; nothing to evaluate");
    }
    const LinkBudgetInput input{rf.params, *rf.distance_m};
    const LinkBudgetReport rep = link_report(input);
    ordered_json j;
    j["carrier_frequency_hz"] = num(rf.params.carrier_frequency_hz);
    j["distance_m"] = num(*rf.distance_m);
    j["fspl_db"] = num(rep.fspl_db);
    j["rx_power_dbm"] = num(rep.rx_power_dbm);
    j["noise_density_mw_per_hz"] = num(rep.noise_density_mw_per_hz);
    j["design_cnr_db"] = num(rf.design_cnr_db);
    j["max_bandwidth_hz"] =
        num(max_bandwidth_for_cnr_hz(rep.rx_power_dbm, rf.design_cnr_db,
                                     rep.noise_density_mw_per_hz));
    return j;
}

ordered_json capacity_report_json(const FronthaulParams& params, int ul_quant_bits) {
    const FrameModel frame = frame_model(params);
    ordered_json j;
    j["fronthaul_rate_dl_bit_per_s"] = num(fronthaul_rate_dl_bps(params));
    const int ul_bits = ul_quant_bits > 0 ? ul_quant_bits : params.quant_bits_per_sample;
    j["fronthaul_rate_ul_bit_per_s"] = num(fronthaul_rate_ul_bps(params, ul_bits));
    j["per_symbol_payload_bits"] = num(frame.per_symbol_payload_bits);
    j["symbol_period_s"] = num(frame.symbol_period_s);
    j["frames_per_second"] = num(frame.frames_per_second);
    return j;
}

ordered_json plan_report_json(const FeasibilityReport& report) {
    ordered_json j;
    j["feasible"] = report.feasible;
    j["latency_budget_s"] = num(report.latency_budget_s);

    ordered_json rus = ordered_json::object();
    for (const auto& ru : report.rus) {
        ordered_json r;
        r["transceiver"] = ru.transceiver;
        r["required_rate_bit_per_s"] = num(ru.required_rate_bps);
        r["distance_m"] = num(ru.distance_m);
        r["rx_power_dbm"] = num(ru.rx_power_dbm);
        r["usable_bandwidth_hz"] = num(ru.usable_bandwidth_hz);
        r["achievable_rate_bit_per_s"] = num(ru.achievable_rate_bps);
        r["margin"] = num(ru.margin);
        r["latency_s"] = num(ru.latency_s);
        r["feasible"] = ru.feasible;
        ordered_json hops = ordered_json::array();
        for (const auto& h : ru.hops) {
            hops.push_back({{"from", h.from},
                            {"to", h.to},
                            {"distance_m", num(h.distance_m)},
                            {"rx_power_dbm", num(h.rx_power_dbm)},
                            {"cnr_db", num(h.cnr_db)},
                            {"rate_bit_per_s", num(h.rate_bps)}});
        }
        r["hops"] = std::move(hops);
        rus[ru.ru] = std::move(r);
    }
    j["rus"] = std::move(rus);

    ordered_json trs = ordered_json::object();
    for (const auto& tl : report.transceivers) {
        trs[tl.id] = {{"load", num(tl.load)}, {"feasible", tl.load <= 1.0}};
    }
    j["transceivers"] = std::move(trs);
    return j;
}

namespace {

ordered_json latency_stats_json(const LatencyStats& s) {
    ordered_json j;
    j["frames_generated"] = s.frames_generated;
    j["frames_delivered"] = s.frames_delivered;
    j["frames_in_flight"] = s.frames_in_flight;
    j["latency_mean_s"] = num(s.latency_mean_s);
    j["latency_p50_s"] = num(s.latency_p50_s);
    j["latency_p95_s"] = num(s.latency_p95_s);
    j["latency_p99_s"] = num(s.latency_p99_s);
    j["latency_max_s"] = num(s.latency_max_s);
    j["budget_violation_fraction"] = num(s.budget_violation_fraction);
    j["outage_s"] = num(s.outage_s);
    return j;
}

}  // namespace

ordered_json metrics_json(const SimMetrics& metrics) {
    ordered_json j;
    j["duration_s"] = num(metrics.duration_s);
    j["aggregate"] = latency_stats_json(metrics.aggregate);
    j["max_queue_depth"] = metrics.max_queue_depth;
    ordered_json per_ru = ordered_json::object();
    for (const auto& [ru, stats] : metrics.per_ru) {
        per_ru[ru] = latency_stats_json(stats);
    }
    j["per_ru"] = std::move(per_ru);
    ordered_json per_link = ordered_json::object();
    for (const auto& ls : metrics.per_link) {
        per_link[ls.key] = {{"utilization", num(ls.utilization)},
                            {"max_queue_depth", ls.max_queue_depth}};
    }
    j["per_link"] = std::move(per_link);
    return j;
}

ordered_json experiments_json(std::span<const ExperimentRecord> records) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
        arr.push_back({{"reference", rec.reference},
                       {"technology", rec.technology},
                       {"center_frequency_hz", num(rec.center_frequency_hz)},
                       {"data_rate_bit_per_s", num(rec.data_rate_bps)},
                       {"rate_is_upper_bound", rec.rate_is_upper_bound},
                       {"distance_m", num(rec.distance_m)},
                       {"signal_generation", rec.signal_generation},
                       {"architecture", rec.architecture}});
    }
    return arr;
}

std::string trace_csv(std::span<const FrameRecord> trace) {
    std::ostringstream out;
    out << "frame_id,ru_id,gen_time_ps,delivery_time_ps,latency_ps,budget_met\n";
    for (const auto& rec : trace) {
        if (rec.delivery_time_ps < 0) continue;  // still in flight at the horizon
        out << rec.frame_id << ',' << rec.ru << ',' << rec.gen_time_ps << ','
            << rec.delivery_time_ps << ',' << (rec.delivery_time_ps - rec.gen_time_ps) << ','
            << (rec.budget_met ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string sweep_csv(const std::string& axis_name,
                      std::span<const std::pair<double, double>> points) {
    std::ostringstream out;
    out << axis_name << ",fronthaul_rate_dl_bit_per_s\n";
    char buf[64];
    for (const auto& [value, rate] : points) {
        std::snprintf(buf, sizeof buf, "%.15g,%.15g\n", round_sig(value), round_sig(rate));
        out << buf;
    }
    return out.str();
}

std::string experiments_csv(std::span<const ExperimentRecord> records) {
    std::ostringstream out;
    out << "reference,technology,center_frequency_hz,data_rate_bit_per_s,rate_is_upper_bound,"
           "distance_m,signal_generation,architecture\n";
    char buf[64];
    for (const auto& rec : records) {
        out << rec.reference << ',' << rec.technology << ',';
        std::snprintf(buf, sizeof buf, "%.15g,%.15g", rec.center_frequency_hz, rec.data_rate_bps);
        out << buf << ',' << (rec.rate_is_upper_bound ? 1 : 0) << ',';
        std::snprintf(buf, sizeof buf, "%.15g", rec.distance_m);
        out << buf << ',' << rec.signal_generation << ',' << rec.architecture << '\n';
    }
    return out.str();
}

}  // namespace thzfh
