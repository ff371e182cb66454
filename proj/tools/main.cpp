/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thzfh/experiments.hpp"
#include "thzfh/planner.hpp"
#include "thzfh/report.hpp"
#include "thzfh/scenario.hpp"
#include "thzfh/sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitInfeasible = 2;

struct CommonOpts {
    std::string scenario_path;
    std::string output_path;
    std::string format = "human";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_scenario = true) {
    auto* pos = cmd->add_option("scenario,--scenario", opts.scenario_path, "scenario JSON file");
    if (needs_scenario) pos->required();
    cmd->add_option("-o,--output", opts.output_path, "write the machine document to this file");
    cmd->add_option("-f,--format", opts.format, "human, json or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
}

void write_out(const CommonOpts& opts, const std::string& text) {
    if (opts.output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opts.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + opts.output_path);
    out << text;
}

std::string g4(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string fmt_si(double v, const char* unit) {
    struct Scale { double factor; const char* prefix; };
    static constexpr Scale scales[] = {
        {1e12, "T"}, {1e9, "G"}, {1e6, "M"}, {1e3, "k"}, {1.0, ""},
        {1e-3, "m"}, {1e-6, "u"}, {1e-9, "n"}, {1e-12, "p"},
    };
    if (v == 0.0) return std::string("0 ") + unit;
    for (const auto& s : scales) {
        if (std::fabs(v) >= s.factor) {
            return g4(v / s.factor) + " " + s.prefix + unit;
        }
    }
    return g4(v) + " " + unit;
}

std::string fmt_rate(double bps) { return fmt_si(bps, "bit/s"); }
std::string fmt_time(double s) { return fmt_si(s, "s"); }

thzfh::Scenario load(const CommonOpts& opts) {
    return thzfh::load_scenario(opts.scenario_path);
}

const thzfh::FronthaulParams& need_fronthaul(const thzfh::Scenario& s) {
    if (!s.fronthaul) throw std::invalid_argument("scenario has no fronthaul section");
    return *s.fronthaul;
}

const thzfh::RfSection& need_rf(const thzfh::Scenario& s) {
    if (!s.rf) throw std::invalid_argument("scenario has no rf section");
    return *s.rf;
}

const thzfh::Deployment& need_deployment(const thzfh::Scenario& s) {
    if (!s.deployment) throw std::invalid_argument("scenario has no deployment section");
    return *s.deployment;
}

thzfh::RfParams default_rf_for(const thzfh::Scenario& s) {
    if (s.rf) return s.rf->params;
    // every transceiver must then carry its own template
    if (s.deployment) {
        for (const auto& t : s.deployment->transceivers) {
            if (!t.rf) {
                throw std::invalid_argument("transceiver " + t.id +
                                            " has no rf template and the scenario has no rf section");
            }
        }
        if (!s.deployment->transceivers.empty() && s.deployment->transceivers.front().rf) {
            return *s.deployment->transceivers.front().rf;
        }
    }
    throw std::invalid_argument("scenario has no rf section");
}

thzfh::PlanOptions plan_options_for(const thzfh::Scenario& s) {
    thzfh::PlanOptions opts;
    if (s.sim) {
        opts.latency_budget_s = s.sim->latency_budget_s;
        opts.forwarding = s.sim->forwarding;
        opts.per_hop_processing_s = s.sim->per_hop_processing_s;
    }
    return opts;
}

int cmd_validate(const CommonOpts& opts) {
    const auto s = load(opts);
    std::cout << "ok: " << (s.metadata.name.empty() ? opts.scenario_path : s.metadata.name)
              << '\n';
    return kExitOk;
}

int cmd_budget(const CommonOpts& opts) {
    const auto s = load(opts);
    const auto& rf = need_rf(s);
    const auto doc = thzfh::budget_report_json(rf);
    if (opts.format != "human") {
        write_out(opts, doc.dump(2));
        return kExitOk;
    }
    std::printf("link budget @ %s, %s\n",
                fmt_si(rf.params.carrier_frequency_hz, "Hz").c_str(),
                fmt_si(rf.distance_m.value_or(0), "m").c_str());
    std::printf("  fspl            %s dB\n", g4(doc["fspl_db"].get<double>()).c_str());
    std::printf("  rx power        %s dBm\n", g4(doc["rx_power_dbm"].get<double>()).c_str());
    std::printf("  noise density   %s mW/Hz\n",
                g4(doc["noise_density_mw_per_hz"].get<double>()).c_str());
    std::printf("  design cnr      %s dB\n", g4(rf.design_cnr_db).c_str());
    std::printf("  max bandwidth   %s\n",
                fmt_si(doc["max_bandwidth_hz"].get<double>(), "Hz").c_str());
    return kExitOk;
}

int cmd_capacity(const CommonOpts& opts) {
    const auto s = load(opts);
    const auto& p = need_fronthaul(s);
    const auto doc = thzfh::capacity_report_json(p, s.ul_quant_bits);
    if (opts.format != "human") {
        write_out(opts, doc.dump(2));
        return kExitOk;
    }
    std::printf("fronthaul rate (DL)  %s\n",
                fmt_rate(doc["fronthaul_rate_dl_bit_per_s"].get<double>()).c_str());
    std::printf("fronthaul rate (UL)  %s\n",
                fmt_rate(doc["fronthaul_rate_ul_bit_per_s"].get<double>()).c_str());
    std::printf("frame payload        %s bits every %s\n",
                g4(doc["per_symbol_payload_bits"].get<double>()).c_str(),
                fmt_time(doc["symbol_period_s"].get<double>()).c_str());
    return kExitOk;
}

int cmd_plan(const CommonOpts& opts) {
    const auto s = load(opts);
    const auto report = thzfh::plan(need_deployment(s), need_fronthaul(s), default_rf_for(s),
                                    s.se_model_or_default(), plan_options_for(s));
    if (opts.format != "human") {
        write_out(opts, thzfh::plan_report_json(report).dump(2));
    } else {
        std::printf("%-10s %-12s %-12s %-8s %-10s %s\n", "ru", "required", "achievable", "margin",
                    "latency", "feasible");
        for (const auto& ru : report.rus) {
            std::printf("%-10s %-12s %-12s %-8s %-10s %s\n", ru.ru.c_str(),
                        fmt_rate(ru.required_rate_bps).c_str(),
                        fmt_rate(ru.achievable_rate_bps).c_str(), g4(ru.margin).c_str(),
                        fmt_time(ru.latency_s).c_str(), ru.feasible ? "yes" : "no");
        }
        for (const auto& tl : report.transceivers) {
            std::printf("transceiver %-8s load %s%s\n", tl.id.c_str(), g4(tl.load).c_str(),
                        tl.load > 1.0 ? " (overloaded)" : "");
        }
        std::printf("overall: %s\n", report.feasible ? "feasible" : "infeasible");
    }
    return report.feasible ? kExitOk : kExitInfeasible;
}

int cmd_simulate(const CommonOpts& opts, const std::string& trace_path) {
    const auto s = load(opts);
    if (!s.sim) throw std::invalid_argument("scenario has no sim section");
    const auto result =
        thzfh::run(need_deployment(s), need_fronthaul(s), default_rf_for(s),
                   s.se_model_or_default(), s.weather.profiles, s.weather.bandwidth_mode, *s.sim,
                   !trace_path.empty());
    if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + trace_path);
        out << thzfh::trace_csv(result.trace);
    }
    const auto& agg = result.metrics.aggregate;
    if (opts.format != "human") {
        write_out(opts, thzfh::metrics_json(result.metrics).dump(2));
    } else {
        std::printf("simulated %s, %llu frames delivered (%llu generated)\n",
                    fmt_time(result.metrics.duration_s).c_str(),
                    static_cast<unsigned long long>(agg.frames_delivered),
                    static_cast<unsigned long long>(agg.frames_generated));
        std::printf("  latency mean/p50/p95/p99/max  %s / %s / %s / %s / %s\n",
                    fmt_time(agg.latency_mean_s).c_str(), fmt_time(agg.latency_p50_s).c_str(),
                    fmt_time(agg.latency_p95_s).c_str(), fmt_time(agg.latency_p99_s).c_str(),
                    fmt_time(agg.latency_max_s).c_str());
        std::printf("  budget violations             %s\n",
                    g4(agg.budget_violation_fraction).c_str());
        std::printf("  outage                        %s\n", fmt_time(agg.outage_s).c_str());
        for (const auto& ls : result.metrics.per_link) {
            std::printf("  link %-16s util %-8s max queue %llu\n", ls.key.c_str(),
                        g4(ls.utilization).c_str(),
                        static_cast<unsigned long long>(ls.max_queue_depth));
        }
    }
    return agg.budget_violation_fraction > 0.0 ? kExitInfeasible : kExitOk;
}

int cmd_sweep(const CommonOpts& opts, const std::string& axis, std::vector<double> values) {
    const auto s = load(opts);
    const auto ax = thzfh::fronthaul_axis_from_name(axis);
    const auto points = thzfh::sweep_rates(need_fronthaul(s), ax, values);
    const std::string axis_name{thzfh::fronthaul_axis_name(ax)};
    if (opts.format == "human") {
        std::printf("%-24s rate\n", axis_name.c_str());
        for (const auto& [v, rate] : points) {
            std::printf("%-24s %s\n", g4(v).c_str(), fmt_rate(rate).c_str());
        }
        return kExitOk;
    }
    if (opts.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& [v, rate] : points) {
            arr.push_back({{axis_name, thzfh::round_sig(v)},
                           {"fronthaul_rate_dl_bit_per_s", thzfh::round_sig(rate)}});
        }
        write_out(opts, arr.dump(2));
        return kExitOk;
    }
    write_out(opts, thzfh::sweep_csv(axis_name, points));
    return kExitOk;
}

int cmd_experiments(const CommonOpts& opts, double min_rate, double min_distance) {
    std::vector<thzfh::ExperimentRecord> records;
    if (min_rate > 0.0 || min_distance > 0.0) {
        records = thzfh::table2_check(min_rate > 0 ? min_rate : 1.0,
                                      min_distance > 0 ? min_distance : 1.0);
    } else {
        const auto all = thzfh::h_band_experiments();
        records.assign(all.begin(), all.end());
    }
    if (opts.format == "human") {
        std::printf("%-6s %-26s %-10s %-12s %-8s %s\n", "ref", "technology", "freq", "rate",
                    "dist", "architecture");
        for (const auto& r : records) {
            std::printf("%-6s %-26s %-10s %s%-11s %-8s %s\n", r.reference.c_str(),
                        r.technology.c_str(), fmt_si(r.center_frequency_hz, "Hz").c_str(),
                        r.rate_is_upper_bound ? "<" : "", fmt_rate(r.data_rate_bps).c_str(),
                        fmt_si(r.distance_m, "m").c_str(), r.architecture.c_str());
        }
        return kExitOk;
    }
    if (opts.format == "json") {
        write_out(opts, thzfh::experiments_json(records).dump(2));
        return kExitOk;
    }
    write_out(opts, thzfh::experiments_csv(records));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"THz point-to-point fronthaul planning and simulation toolkit"};
    app.require_subcommand(1);

    CommonOpts validate_opts, budget_opts, capacity_opts, plan_opts, sim_opts, sweep_opts,
        exp_opts;
    std::string trace_path, sweep_axis;
    std::vector<double> sweep_values;
    double min_rate = 0.0, min_distance = 0.0;

    auto* validate = app.add_subcommand("validate", "parse and validate a scenario file");
    add_common(validate, validate_opts);

    auto* budget = app.add_subcommand("budget", "link budget and bandwidth/CNR tradeoff");
    add_common(budget, budget_opts);

    auto* capacity = app.add_subcommand("capacity", "required eCPRI fronthaul rates");
    add_common(capacity, capacity_opts);

    auto* plan = app.add_subcommand("plan", "static deployment feasibility report");
    add_common(plan, plan_opts);

    auto* simulate = app.add_subcommand("simulate", "discrete-event frame transport simulation");
    add_common(simulate, sim_opts);
    simulate->add_option("--trace", trace_path, "write the per-frame trace CSV to this file");

    auto* sweep = app.add_subcommand("sweep", "fronthaul rate sweep along one parameter");
    add_common(sweep, sweep_opts);
    sweep->add_option("--axis", sweep_axis, "fronthaul parameter to sweep")->required();
    sweep->add_option("--values", sweep_values, "comma-separated axis values")
        ->required()
        ->delimiter(',');

    auto* experiments =
        app.add_subcommand("experiments", "published over-the-air throughput demonstrations");
    add_common(experiments, exp_opts, /*needs_scenario=*/false);
    experiments->add_option("--min-rate", min_rate, "keep records with at least this rate, bit/s");
    experiments->add_option("--min-distance", min_distance,
                            "keep records over at least this distance, m");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(validate_opts);
        if (budget->parsed()) return cmd_budget(budget_opts);
        if (capacity->parsed()) return cmd_capacity(capacity_opts);
        if (plan->parsed()) return cmd_plan(plan_opts);
        if (simulate->parsed()) return cmd_simulate(sim_opts, trace_path);
        if (sweep->parsed()) return cmd_sweep(sweep_opts, sweep_axis, sweep_values);
        if (experiments->parsed()) return cmd_experiments(exp_opts, min_rate, min_distance);
    } catch (const thzfh::ScenarioError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
