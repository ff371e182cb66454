/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_SCENARIO_HPP
#define THZFH_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "thzfh/deployment.hpp"
#include "thzfh/ecpri.hpp"
#include "thzfh/link_budget.hpp"
#include "thzfh/se_model.hpp"
#include "thzfh/sim.hpp"
#include "thzfh/weather.hpp"

namespace thzfh {

enum class ScenarioErrorKind {
    io,                  // file unreadable
    parse,               // malformed JSON (line/column in the message)
    missing_field,
    type_mismatch,
    invariant,           // field present, value outside its contract
    dangling_reference,  // id referenced but not defined, or defined twice
};

const char* scenario_error_kind_name(ScenarioErrorKind kind);

class ScenarioError : public std::runtime_error {
public:
    ScenarioError(ScenarioErrorKind kind, std::string path, const std::string& message);
    ScenarioErrorKind kind() const { return kind_; }
    const std::string& path() const { return path_; }  // JSON pointer of the offending field

private:
    ScenarioErrorKind kind_;
    std::string path_;
};

struct ScenarioMetadata {
    std::string name;
    std::string description;
};

struct RfSection {
    RfParams params;
    std::optional<double> distance_m;  // required by the budget command
    double design_cnr_db = 20.0;
};

struct WeatherSection {
    std::vector<WeatherProfile> profiles;
    BandwidthMode bandwidth_mode = BandwidthMode::fixed;
};

/// A full study input: every section optional except metadata, commands
/// check for what they need.
struct Scenario {
    ScenarioMetadata metadata;
    std::optional<FronthaulParams> fronthaul;
    int ul_quant_bits = 0;  // 0 = same width as downlink
    std::optional<RfSection> rf;
    std::optional<SpectralEfficiencyModel> se_model;
    std::optional<Deployment> deployment;
    WeatherSection weather;
    std::optional<SimConfig> sim;

    /// The SE model to use, falling back to the documented non-measured default.
    SpectralEfficiencyModel se_model_or_default() const;
};

Scenario load_scenario(const std::filesystem::path& path);
Scenario scenario_from_json(const nlohmann::json& j);

/// Canonical form: fixed key order, only explicitly-set optional fields.
/// load_scenario(emit_scenario(s)) reproduces s.
nlohmann::ordered_json emit_scenario(const Scenario& s);

}  // namespace thzfh

#endif
