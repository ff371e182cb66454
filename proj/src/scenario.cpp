/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/scenario.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "thzfh/units.hpp"

namespace thzfh {

using nlohmann::json;
using nlohmann::ordered_json;

const char* scenario_error_kind_name(ScenarioErrorKind kind) {
    switch (kind) {
        case ScenarioErrorKind::io: return "io";
        case ScenarioErrorKind::parse: return "parse";
        case ScenarioErrorKind::missing_field: return "missing_field";
        case ScenarioErrorKind::type_mismatch: return "type_mismatch";
        case ScenarioErrorKind::invariant: return "invariant";
        case ScenarioErrorKind::dangling_reference: return "dangling_reference";
    }
    return "unknown";
}

ScenarioError::ScenarioError(ScenarioErrorKind kind, std::string path, const std::string& message)
    : std::runtime_error(std::string(scenario_error_kind_name(kind)) + " at " +
                         (path.empty() ? "/" : path) + ": " + message),
      kind_(kind),
      path_(std::move(path)) {}

namespace {

[[noreturn]] void fail(ScenarioErrorKind kind, const std::string& path, const std::string& msg) {
    throw ScenarioError(kind, path, msg);
}

const json& require_key(const json& obj, const std::string& path, const std::string& key) {
    if (!obj.is_object()) fail(ScenarioErrorKind::type_mismatch, path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail(ScenarioErrorKind::missing_field, path + "/" + key, "required field is missing");
    }
    return *it;
}

double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(ScenarioErrorKind::type_mismatch, path, "expected a number");
    return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(ScenarioErrorKind::type_mismatch, path, "expected an integer");
    return v.get<int>();
}

std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) fail(ScenarioErrorKind::type_mismatch, path, "expected a string");
    return v.get<std::string>();
}

double get_number(const json& obj, const std::string& path, const std::string& key) {
    return as_number(require_key(obj, path, key), path + "/" + key);
}

int get_int(const json& obj, const std::string& path, const std::string& key) {
    return as_int(require_key(obj, path, key), path + "/" + key);
}

std::string get_string(const json& obj, const std::string& path, const std::string& key) {
    return as_string(require_key(obj, path, key), path + "/" + key);
}

double opt_number(const json& obj, const std::string& path, const std::string& key, double dflt) {
    if (!obj.is_object() || !obj.contains(key)) return dflt;
    return as_number(obj.at(key), path + "/" + key);
}

std::string opt_string(const json& obj, const std::string& path, const std::string& key,
                       const std::string& dflt) {
    if (!obj.is_object() || !obj.contains(key)) return dflt;
    return as_string(obj.at(key), path + "/" + key);
}

// invariant checks live on the domain types; re-tag their exceptions with the path
template <typename Fn>
void checked(const std::string& path, Fn&& fn) {
    try {
        fn();
    } catch (const std::invalid_argument& e) {
        fail(ScenarioErrorKind::invariant, path, e.what());
    }
}

RfParams parse_rf_params(const json& j, const std::string& path) {
    RfParams rf;
    rf.carrier_frequency_hz = get_number(j, path, "carrier_frequency_hz");
    rf.tx_power_dbm = get_number(j, path, "tx_power_dbm");
    rf.tx_antenna_gain_dbi = get_number(j, path, "tx_antenna_gain_dbi");
    rf.rx_antenna_gain_dbi = get_number(j, path, "rx_antenna_gain_dbi");
    rf.excess_loss_db = get_number(j, path, "excess_loss_db");
    rf.rx_noise_figure_db = get_number(j, path, "rx_noise_figure_db");
    rf.antenna_temperature_k = get_number(j, path, "antenna_temperature_k");
    checked(path, [&] { rf.validate(); });
    return rf;
}

FronthaulParams parse_fronthaul(const json& j, const std::string& path) {
    FronthaulParams p;
    p.bandwidth_hz = get_number(j, path, "bandwidth_hz");
    p.subcarrier_spacing_hz = get_number(j, path, "subcarrier_spacing_hz");
    p.subframe_period_s = get_number(j, path, "subframe_period_s");
    p.symbols_per_subframe = get_int(j, path, "symbols_per_subframe");
    p.num_antennas = get_int(j, path, "num_antennas");
    p.quant_bits_per_sample = get_int(j, path, "quant_bits_per_sample");
    p.overhead_factor = get_number(j, path, "overhead_factor");
    checked(path, [&] { p.validate(); });
    return p;
}

SpectralEfficiencyModel parse_se_model(const json& j, const std::string& path) {
    SpectralEfficiencyModel m;
    const std::string mode = opt_string(j, path, "mode", "shannon_gap");
    if (mode == "shannon_gap") {
        m.mode = SpectralEfficiencyModel::Mode::shannon_gap;
        m.gap_db = opt_number(j, path, "gap_db", m.gap_db);
        m.max_se = opt_number(j, path, "max_se_bit_per_s_per_hz", m.max_se);
        m.min_cnr_db = opt_number(j, path, "min_cnr_db", m.min_cnr_db);
    } else if (mode == "fixed_table") {
        m.mode = SpectralEfficiencyModel::Mode::fixed_table;
        const json& table = require_key(j, path, "table");
        if (!table.is_array()) {
            fail(ScenarioErrorKind::type_mismatch, path + "/table", "expected an array");
        }
        for (size_t i = 0; i < table.size(); ++i) {
            const std::string sp = path + "/table/" + std::to_string(i);
            m.table.push_back({get_number(table[i], sp, "min_cnr_db"),
                               get_number(table[i], sp, "se_bit_per_s_per_hz")});
        }
    } else {
        fail(ScenarioErrorKind::invariant, path + "/mode",
             "mode must be shannon_gap or fixed_table");
    }
    checked(path, [&] { m.validate(); });
    return m;
}

Deployment parse_deployment(const json& j, const std::string& path) {
    Deployment d;
    const json& nodes = require_key(j, path, "nodes");
    if (!nodes.is_array()) fail(ScenarioErrorKind::type_mismatch, path + "/nodes", "expected an array");
    std::unordered_set<std::string> node_ids;
    for (size_t i = 0; i < nodes.size(); ++i) {
        const std::string np = path + "/nodes/" + std::to_string(i);
        Node n;
        n.id = get_string(nodes[i], np, "id");
        checked(np + "/kind", [&] { n.kind = node_kind_from_name(get_string(nodes[i], np, "kind")); });
        const json& pos = require_key(nodes[i], np, "position_m");
        if (!pos.is_array() || pos.size() != 2) {
            fail(ScenarioErrorKind::type_mismatch, np + "/position_m", "expected [x, y]");
        }
        n.x_m = as_number(pos[0], np + "/position_m/0");
        n.y_m = as_number(pos[1], np + "/position_m/1");
        if (!node_ids.insert(n.id).second) {
            fail(ScenarioErrorKind::dangling_reference, np + "/id", "duplicate node id: " + n.id);
        }
        d.nodes.push_back(std::move(n));
    }

    const json& trs = require_key(j, path, "transceivers");
    if (!trs.is_array()) fail(ScenarioErrorKind::type_mismatch, path + "/transceivers", "expected an array");
    std::unordered_set<std::string> tr_ids;
    for (size_t i = 0; i < trs.size(); ++i) {
        const std::string tp = path + "/transceivers/" + std::to_string(i);
        ThzTransceiver t;
        t.id = get_string(trs[i], tp, "id");
        t.host_node = get_string(trs[i], tp, "host_node");
        if (!node_ids.count(t.host_node)) {
            fail(ScenarioErrorKind::dangling_reference, tp + "/host_node",
                 "unknown node: " + t.host_node);
        }
        t.design_cnr_db = get_number(trs[i], tp, "design_cnr_db");
        if (trs[i].contains("design_distance_m")) {
            t.design_distance_m = as_number(trs[i].at("design_distance_m"),
                                            tp + "/design_distance_m");
        }
        if (trs[i].contains("rf")) {
            t.rf = parse_rf_params(trs[i].at("rf"), tp + "/rf");
        }
        if (!tr_ids.insert(t.id).second) {
            fail(ScenarioErrorKind::dangling_reference, tp + "/id",
                 "duplicate transceiver id: " + t.id);
        }
        d.transceivers.push_back(std::move(t));
    }

    const json& links = require_key(j, path, "links");
    if (!links.is_array()) fail(ScenarioErrorKind::type_mismatch, path + "/links", "expected an array");
    for (size_t i = 0; i < links.size(); ++i) {
        const std::string lp = path + "/links/" + std::to_string(i);
        RuLink l;
        l.ru = get_string(links[i], lp, "ru");
        l.transceiver = get_string(links[i], lp, "transceiver");
        if (!tr_ids.count(l.transceiver)) {
            fail(ScenarioErrorKind::dangling_reference, lp + "/transceiver",
                 "unknown transceiver: " + l.transceiver);
        }
        const json& chain = require_key(links[i], lp, "chain");
        if (!chain.is_array()) fail(ScenarioErrorKind::type_mismatch, lp + "/chain", "expected an array");
        for (size_t k = 0; k < chain.size(); ++k) {
            const std::string id = as_string(chain[k], lp + "/chain/" + std::to_string(k));
            if (!node_ids.count(id)) {
                fail(ScenarioErrorKind::dangling_reference, lp + "/chain/" + std::to_string(k),
                     "unknown node: " + id);
            }
            l.chain.push_back(id);
        }
        if (!node_ids.count(l.ru)) {
            fail(ScenarioErrorKind::dangling_reference, lp + "/ru", "unknown node: " + l.ru);
        }
        if (links[i].contains("link_rate_bit_per_s")) {
            l.link_rate_override_bps = as_number(links[i].at("link_rate_bit_per_s"),
                                                 lp + "/link_rate_bit_per_s");
        }
        d.links.push_back(std::move(l));
    }

    checked(path, [&] { d.validate(); });
    return d;
}

WeatherSection parse_weather(const json& j, const std::string& path) {
    WeatherSection w;
    checked(path + "/bandwidth_mode", [&] {
        w.bandwidth_mode = bandwidth_mode_from_name(opt_string(j, path, "bandwidth_mode", "fixed"));
    });
    if (!j.contains("profiles")) return w;
    const json& profiles = j.at("profiles");
    if (!profiles.is_array()) {
        fail(ScenarioErrorKind::type_mismatch, path + "/profiles", "expected an array");
    }
    for (size_t i = 0; i < profiles.size(); ++i) {
        const std::string pp = path + "/profiles/" + std::to_string(i);
        WeatherProfile p;
        p.horizon_s = get_number(profiles[i], pp, "horizon_s");
        if (profiles[i].contains("applies_to")) {
            const json& ids = profiles[i].at("applies_to");
            if (!ids.is_array()) {
                fail(ScenarioErrorKind::type_mismatch, pp + "/applies_to", "expected an array");
            }
            for (size_t k = 0; k < ids.size(); ++k) {
                p.applies_to.push_back(as_string(ids[k], pp + "/applies_to/" + std::to_string(k)));
            }
        }
        const json& segs = require_key(profiles[i], pp, "segments");
        if (!segs.is_array()) fail(ScenarioErrorKind::type_mismatch, pp + "/segments", "expected an array");
        for (size_t k = 0; k < segs.size(); ++k) {
            const std::string sp = pp + "/segments/" + std::to_string(k);
            WeatherSegment seg;
            seg.start_s = get_number(segs[k], sp, "start_s");
            seg.condition = opt_string(segs[k], sp, "condition", "");
            seg.specific_attenuation_db_per_km =
                get_number(segs[k], sp, "specific_attenuation_db_per_km");
            p.segments.push_back(std::move(seg));
        }
        checked(pp, [&] { p.validate(); });
        w.profiles.push_back(std::move(p));
    }
    return w;
}

SimConfig parse_sim(const json& j, const std::string& path) {
    SimConfig c;
    c.duration_s = get_number(j, path, "duration_s");
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_integer()) {
            fail(ScenarioErrorKind::type_mismatch, path + "/seed", "expected an integer");
        }
        c.seed = j.at("seed").get<uint64_t>();
    }
    checked(path + "/forwarding", [&] {
        c.forwarding = forwarding_from_name(opt_string(j, path, "forwarding", "store_and_forward"));
    });
    c.per_hop_processing_s = opt_number(j, path, "per_hop_processing_s", 0.0);
    c.latency_budget_s = opt_number(j, path, "latency_budget_s", 100e-6);
    c.load_factor = opt_number(j, path, "load_factor", 1.0);
    c.uplink_fraction = opt_number(j, path, "uplink_fraction", 1.0);
    c.gen_jitter_fraction = opt_number(j, path, "gen_jitter_fraction", 0.0);
    checked(path, [&] { c.validate(); });
    return c;
}

}  // namespace

SpectralEfficiencyModel Scenario::se_model_or_default() const {
    return se_model ? *se_model : SpectralEfficiencyModel{};
}

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) fail(ScenarioErrorKind::type_mismatch, "", "scenario must be an object");
    Scenario s;
    if (j.contains("metadata")) {
        s.metadata.name = opt_string(j.at("metadata"), "/metadata", "name", "");
        s.metadata.description = opt_string(j.at("metadata"), "/metadata", "description", "");
    }
    if (j.contains("fronthaul")) {
        s.fronthaul = parse_fronthaul(j.at("fronthaul"), "/fronthaul");
        if (j.at("fronthaul").contains("ul_quant_bits_per_sample")) {
            s.ul_quant_bits = as_int(j.at("fronthaul").at("ul_quant_bits_per_sample"),
                                     "/fronthaul/ul_quant_bits_per_sample");
            checked("/fronthaul/ul_quant_bits_per_sample", [&] {
                if (s.ul_quant_bits <= 0 || s.ul_quant_bits % 2 != 0) {
                    throw std::invalid_argument("must be a positive even integer");
                }
            });
        }
    }
    if (j.contains("rf")) {
        RfSection rf;
        rf.params = parse_rf_params(j.at("rf"), "/rf");
        if (j.at("rf").contains("distance_m")) {
            rf.distance_m = as_number(j.at("rf").at("distance_m"), "/rf/distance_m");
            checked("/rf/distance_m", [&] { check_positive(*rf.distance_m, "distance_m"); });
        }
        rf.design_cnr_db = opt_number(j.at("rf"), "/rf", "design_cnr_db", 20.0);
        s.rf = std::move(rf);
    }
    if (j.contains("se_model")) {
        s.se_model = parse_se_model(j.at("se_model"), "/se_model");
    }
    if (j.contains("deployment")) {
        s.deployment = parse_deployment(j.at("deployment"), "/deployment");
    }
    if (j.contains("weather")) {
        s.weather = parse_weather(j.at("weather"), "/weather");
    }
    if (j.contains("sim")) {
        s.sim = parse_sim(j.at("sim"), "/sim");
        s.sim->ul_quant_bits = s.ul_quant_bits;
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        fail(ScenarioErrorKind::io, "", "cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // translate the byte offset into line:column
        size_t line = 1, col = 1;
        for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
            if (text[i] == '\n') { ++line; col = 1; }
            else ++col;
        }
        fail(ScenarioErrorKind::parse, "",
             path.filename().string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                 ": " + e.what());
    }
    return scenario_from_json(j);
}

namespace {

ordered_json emit_rf_params(const RfParams& rf) {
    ordered_json j;
    j["carrier_frequency_hz"] = rf.carrier_frequency_hz;
    j["tx_power_dbm"] = rf.tx_power_dbm;
    j["tx_antenna_gain_dbi"] = rf.tx_antenna_gain_dbi;
    j["rx_antenna_gain_dbi"] = rf.rx_antenna_gain_dbi;
    j["excess_loss_db"] = rf.excess_loss_db;
    j["rx_noise_figure_db"] = rf.rx_noise_figure_db;
    j["antenna_temperature_k"] = rf.antenna_temperature_k;
    return j;
}

}  // namespace

ordered_json emit_scenario(const Scenario& s) {
    ordered_json out;
    out["metadata"] = {{"name", s.metadata.name}, {"description", s.metadata.description}};
    if (s.fronthaul) {
        ordered_json j;
        j["bandwidth_hz"] = s.fronthaul->bandwidth_hz;
        j["subcarrier_spacing_hz"] = s.fronthaul->subcarrier_spacing_hz;
        j["subframe_period_s"] = s.fronthaul->subframe_period_s;
        j["symbols_per_subframe"] = s.fronthaul->symbols_per_subframe;
        j["num_antennas"] = s.fronthaul->num_antennas;
        j["quant_bits_per_sample"] = s.fronthaul->quant_bits_per_sample;
        j["overhead_factor"] = s.fronthaul->overhead_factor;
        if (s.ul_quant_bits != 0) j["ul_quant_bits_per_sample"] = s.ul_quant_bits;
        out["fronthaul"] = std::move(j);
    }
    if (s.rf) {
        ordered_json j = emit_rf_params(s.rf->params);
        if (s.rf->distance_m) j["distance_m"] = *s.rf->distance_m;
        j["design_cnr_db"] = s.rf->design_cnr_db;
        out["rf"] = std::move(j);
    }
    if (s.se_model) {
        ordered_json j;
        if (s.se_model->mode == SpectralEfficiencyModel::Mode::shannon_gap) {
            j["mode"] = "shannon_gap";
            j["gap_db"] = s.se_model->gap_db;
            j["max_se_bit_per_s_per_hz"] = s.se_model->max_se;
            j["min_cnr_db"] = s.se_model->min_cnr_db;
        } else {
            j["mode"] = "fixed_table";
            ordered_json table = ordered_json::array();
            for (const auto& step : s.se_model->table) {
                table.push_back({{"min_cnr_db", step.min_cnr_db},
                                 {"se_bit_per_s_per_hz", step.se_bit_per_s_per_hz}});
            }
            j["table"] = std::move(table);
        }
        out["se_model"] = std::move(j);
    }
    if (s.deployment) {
        ordered_json nodes = ordered_json::array();
        for (const auto& n : s.deployment->nodes) {
            nodes.push_back({{"id", n.id},
                             {"kind", node_kind_name(n.kind)},
                             {"position_m", {n.x_m, n.y_m}}});
        }
        ordered_json trs = ordered_json::array();
        for (const auto& t : s.deployment->transceivers) {
            ordered_json jt;
            jt["id"] = t.id;
            jt["host_node"] = t.host_node;
            jt["design_cnr_db"] = t.design_cnr_db;
            if (t.design_distance_m) jt["design_distance_m"] = *t.design_distance_m;
            if (t.rf) jt["rf"] = emit_rf_params(*t.rf);
            trs.push_back(std::move(jt));
        }
        ordered_json links = ordered_json::array();
        for (const auto& l : s.deployment->links) {
            ordered_json jl;
            jl["ru"] = l.ru;
            jl["chain"] = l.chain;
            jl["transceiver"] = l.transceiver;
            if (l.link_rate_override_bps) jl["link_rate_bit_per_s"] = *l.link_rate_override_bps;
            links.push_back(std::move(jl));
        }
        out["deployment"] = {{"nodes", std::move(nodes)},
                             {"transceivers", std::move(trs)},
                             {"links", std::move(links)}};
    }
    if (!s.weather.profiles.empty()) {
        ordered_json j;
        j["bandwidth_mode"] = bandwidth_mode_name(s.weather.bandwidth_mode);
        ordered_json profiles = ordered_json::array();
        for (const auto& p : s.weather.profiles) {
            ordered_json jp;
            jp["horizon_s"] = p.horizon_s;
            if (!p.applies_to.empty()) jp["applies_to"] = p.applies_to;
            ordered_json segs = ordered_json::array();
            for (const auto& seg : p.segments) {
                segs.push_back({{"start_s", seg.start_s},
                                {"condition", seg.condition},
                                {"specific_attenuation_db_per_km",
                                 seg.specific_attenuation_db_per_km}});
            }
            jp["segments"] = std::move(segs);
            profiles.push_back(std::move(jp));
        }
        j["profiles"] = std::move(profiles);
        out["weather"] = std::move(j);
    }
    if (s.sim) {
        ordered_json j;
        j["duration_s"] = s.sim->duration_s;
        j["seed"] = s.sim->seed;
        j["forwarding"] = forwarding_name(s.sim->forwarding);
        j["per_hop_processing_s"] = s.sim->per_hop_processing_s;
        j["latency_budget_s"] = s.sim->latency_budget_s;
        j["load_factor"] = s.sim->load_factor;
        j["uplink_fraction"] = s.sim->uplink_fraction;
        j["gen_jitter_fraction"] = s.sim->gen_jitter_fraction;
        out["sim"] = std::move(j);
    }
    return out;
}

}  // namespace thzfh
