/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_SE_MODEL_HPP
#define THZFH_SE_MODEL_HPP

#include <vector>

namespace thzfh {

/// Maps CNR to link spectral efficiency. Not a measured hardware law; both
/// modes are configurable stand-ins for whatever modem the deployment uses.
struct SpectralEfficiencyModel {
    enum class Mode { shannon_gap, fixed_table };

    struct TableStep {
        double min_cnr_db;
        double se_bit_per_s_per_hz;
    };

    Mode mode = Mode::shannon_gap;

    // shannon_gap: se = min(max_se, log2(1 + 10^((cnr - gap)/10))), 0 below min_cnr.
    double gap_db     = 3.0;
    double max_se     = 6.0;  // [bit/s/Hz]
    double min_cnr_db = 0.0;  // link down below this

    // fixed_table: highest step with min_cnr_db <= cnr applies; 0 below the
    // lowest step. Steps sorted ascending, se non-decreasing.
    std::vector<TableStep> table;

    void validate() const;
    double se(double cnr_db) const;  // [bit/s/Hz]
};

/// bandwidth * se(cnr). A CNR below the model floor yields 0 (link down).
double achievable_rate_bps(double cnr_db, double bandwidth_hz, const SpectralEfficiencyModel& model);

}  // namespace thzfh

#endif
