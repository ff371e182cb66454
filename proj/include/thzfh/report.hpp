/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_REPORT_HPP
#define THZFH_REPORT_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thzfh/experiments.hpp"
#include "thzfh/planner.hpp"
#include "thzfh/scenario.hpp"
#include "thzfh/sim.hpp"

namespace thzfh {

/// Machine output keeps 15 significant digits; values are rounded once here
/// so that serialization is reproducible byte for byte.
double round_sig(double value, int digits = 15);

nlohmann::ordered_json budget_report_json(const RfSection& rf);
nlohmann::ordered_json capacity_report_json(const FronthaulParams& params, int ul_quant_bits);
nlohmann::ordered_json plan_report_json(const FeasibilityReport& report);
nlohmann::ordered_json metrics_json(const SimMetrics& metrics);
nlohmann::ordered_json experiments_json(std::span<const ExperimentRecord> records);

/// Per-frame trace, delivered frames only, integer picosecond timestamps.
/// Columns: frame_id, ru_id, gen_time_ps, delivery_time_ps, latency_ps, budget_met.
std::string trace_csv(std::span<const FrameRecord> trace);

std::string sweep_csv(const std::string& axis_name,
                      std::span<const std::pair<double, double>> points);

std::string experiments_csv(std::span<const ExperimentRecord> records);

}  // namespace thzfh

#endif
