/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_ECPRI_HPP
#define THZFH_ECPRI_HPP

#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace thzfh {

/// Inputs of the fronthaul IQ data-rate model for a 7.2-split downlink.
struct FronthaulParams {
    double bandwidth_hz           = 0.0;  // B
    double subcarrier_spacing_hz  = 0.0;  // delta f
    double subframe_period_s      = 0.0;  // t_SF
    int    symbols_per_subframe   = 0;    // N_S
    int    num_antennas           = 0;    // N_A
    int    quant_bits_per_sample  = 0;    // N_AQ, I+Q combined, even
    double overhead_factor        = 0.0;  // psi_DC, >= 1

    void validate() const;  // throws std::invalid_argument
};

/// The same stream decomposed into one frame per OFDM symbol (all antennas
/// aggregated). payload * frames_per_second reproduces the fronthaul rate.
struct FrameModel {
    double per_symbol_payload_bits;
    double symbol_period_s;
    double frames_per_second;
};

/// Required downlink eCPRI IQ rate:
///   C_FH = (B / delta_f) * (1 / t_SF) * N_S * N_A * N_AQ * psi_DC
/// The subcarrier ratio B/delta_f is kept real-valued, not truncated.
double fronthaul_rate_dl_bps(const FronthaulParams& params);

/// Uplink rate: same model with the quantization bit-width swapped.
double fronthaul_rate_ul_bps(const FronthaulParams& params, int ul_quant_bits);

FrameModel frame_model(const FronthaulParams& params);

enum class FronthaulAxis {
    bandwidth,
    subcarrier_spacing,
    subframe_period,
    symbols_per_subframe,
    num_antennas,
    quant_bits_per_sample,
    overhead_factor,
};

/// Accepts the scenario-file field names ("bandwidth_hz", "num_antennas", ...)
/// with or without the unit suffix. Throws on unknown names.
FronthaulAxis fronthaul_axis_from_name(std::string_view name);
std::string_view fronthaul_axis_name(FronthaulAxis axis);

/// Evaluates fronthaul_rate_dl_bps once per value along one axis; the base
/// params are untouched. Values must satisfy the axis field's invariants.
std::vector<std::pair<double, double>> sweep_rates(const FronthaulParams& base,
                                                   FronthaulAxis axis,
                                                   std::span<const double> values);

}  // namespace thzfh

#endif
