/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/se_model.hpp"

#include <cmath>
#include <stdexcept>

#include "thzfh/units.hpp"

namespace thzfh {

void SpectralEfficiencyModel::validate() const {
    if (mode == Mode::shannon_gap) {
        check_non_negative(gap_db, "gap_db");
        check_positive(max_se, "max_se");
        if (!std::isfinite(min_cnr_db)) {
            throw std::invalid_argument("min_cnr_db must be finite");
        }
        return;
    }
    if (table.empty()) {
        throw std::invalid_argument("fixed_table mode requires at least one step");
    }
    double prev_cnr = -1e300;
    double prev_se = 0.0;
    for (const auto& step : table) {
        if (!std::isfinite(step.min_cnr_db) || step.min_cnr_db <= prev_cnr) {
            throw std::invalid_argument("table steps must have strictly increasing min_cnr_db");
        }
        if (!std::isfinite(step.se_bit_per_s_per_hz) || step.se_bit_per_s_per_hz <= 0.0 ||
            step.se_bit_per_s_per_hz < prev_se) {
            throw std::invalid_argument("table se values must be positive and non-decreasing");
        }
        prev_cnr = step.min_cnr_db;
        prev_se = step.se_bit_per_s_per_hz;
    }
}

double SpectralEfficiencyModel::se(double cnr_db) const {
    if (mode == Mode::shannon_gap) {
        if (cnr_db < min_cnr_db) return 0.0;
        return std::min(max_se, std::log2(1.0 + db_to_linear(cnr_db - gap_db)));
    }
    double result = 0.0;
    for (const auto& step : table) {
        if (cnr_db >= step.min_cnr_db) {
            result = step.se_bit_per_s_per_hz;
        } else {
            break;
        }
    }
    return result;
}

double achievable_rate_bps(double cnr_db, double bandwidth_hz,
                           const SpectralEfficiencyModel& model) {
    check_positive(bandwidth_hz, "bandwidth_hz");
    model.validate();
    return bandwidth_hz * model.se(cnr_db);
}

}  // namespace thzfh
