/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/ecpri.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "thzfh/units.hpp"

namespace thzfh {

namespace {

void check_positive_int(int v, const char* what) {
    if (v <= 0) {
        throw std::invalid_argument(std::string(what) + " must be > 0");
    }
}

void check_quant_bits(int bits, const char* what) {
    check_positive_int(bits, what);
    if (bits % 2 != 0) {
        throw std::invalid_argument(std::string(what) + " must be even (I and Q symmetric)");
    }
}

}  // namespace

void FronthaulParams::validate() const {
    check_positive(bandwidth_hz, "bandwidth_hz");
    check_positive(subcarrier_spacing_hz, "subcarrier_spacing_hz");
    check_positive(subframe_period_s, "subframe_period_s");
    check_positive_int(symbols_per_subframe, "symbols_per_subframe");
    check_positive_int(num_antennas, "num_antennas");
    check_quant_bits(quant_bits_per_sample, "quant_bits_per_sample");
    if (!std::isfinite(overhead_factor) || overhead_factor < 1.0) {
        throw std::invalid_argument("overhead_factor must be >= 1");
    }
}

double fronthaul_rate_dl_bps(const FronthaulParams& p) {
    p.validate();
    // Grouped as payload-per-symbol times symbol rate so that the identity
    // with frame_model() holds bit-exactly.
    const double per_symbol_bits = (p.bandwidth_hz / p.subcarrier_spacing_hz) *
                                   p.quant_bits_per_sample * p.overhead_factor * p.num_antennas;
    return per_symbol_bits * (p.symbols_per_subframe / p.subframe_period_s);
}

double fronthaul_rate_ul_bps(const FronthaulParams& p, int ul_quant_bits) {
    check_quant_bits(ul_quant_bits, "ul_quant_bits");
    FronthaulParams ul = p;
    ul.quant_bits_per_sample = ul_quant_bits;
    return fronthaul_rate_dl_bps(ul);
}

FrameModel frame_model(const FronthaulParams& p) {
    p.validate();
    FrameModel m;
    m.per_symbol_payload_bits = (p.bandwidth_hz / p.subcarrier_spacing_hz) *
                                p.quant_bits_per_sample * p.overhead_factor * p.num_antennas;
    m.symbol_period_s = p.subframe_period_s / p.symbols_per_subframe;
    m.frames_per_second = p.symbols_per_subframe / p.subframe_period_s;
    return m;
}

FronthaulAxis fronthaul_axis_from_name(std::string_view name) {
    if (name == "bandwidth_hz" || name == "bandwidth") return FronthaulAxis::bandwidth;
    if (name == "subcarrier_spacing_hz" || name == "subcarrier_spacing")
        return FronthaulAxis::subcarrier_spacing;
    if (name == "subframe_period_s" || name == "subframe_period")
        return FronthaulAxis::subframe_period;
    if (name == "symbols_per_subframe") return FronthaulAxis::symbols_per_subframe;
    if (name == "num_antennas") return FronthaulAxis::num_antennas;
    if (name == "quant_bits_per_sample") return FronthaulAxis::quant_bits_per_sample;
    if (name == "overhead_factor") return FronthaulAxis::overhead_factor;
    throw std::invalid_argument("unknown sweep axis: " + std::string(name));
}

std::string_view fronthaul_axis_name(FronthaulAxis axis) {
    switch (axis) {
        case FronthaulAxis::bandwidth: return "bandwidth_hz";
        case FronthaulAxis::subcarrier_spacing: return "subcarrier_spacing_hz";
        case FronthaulAxis::subframe_period: return "subframe_period_s";
        case FronthaulAxis::symbols_per_subframe: return "symbols_per_subframe";
        case FronthaulAxis::num_antennas: return "num_antennas";
        case FronthaulAxis::quant_bits_per_sample: return "quant_bits_per_sample";
        case FronthaulAxis::overhead_factor: return "overhead_factor";
    }
    throw std::logic_error("unreachable");
}

namespace {

int to_count(double v, const char* what) {
    if (!std::isfinite(v) || v != std::floor(v)) {
        throw std::invalid_argument(std::string(what) + " values must be integers");
    }
    return static_cast<int>(v);
}

FronthaulParams with_axis_value(const FronthaulParams& base, FronthaulAxis axis, double value) {
    FronthaulParams p = base;
    switch (axis) {
        case FronthaulAxis::bandwidth: p.bandwidth_hz = value; break;
        case FronthaulAxis::subcarrier_spacing: p.subcarrier_spacing_hz = value; break;
        case FronthaulAxis::subframe_period: p.subframe_period_s = value; break;
        case FronthaulAxis::symbols_per_subframe:
            p.symbols_per_subframe = to_count(value, "symbols_per_subframe");
            break;
        case FronthaulAxis::num_antennas:
            p.num_antennas = to_count(value, "num_antennas");
            break;
        case FronthaulAxis::quant_bits_per_sample:
            p.quant_bits_per_sample = to_count(value, "quant_bits_per_sample");
            break;
        case FronthaulAxis::overhead_factor: p.overhead_factor = value; break;
    }
    return p;
}

}  // namespace

std::vector<std::pair<double, double>> sweep_rates(const FronthaulParams& base,
                                                   FronthaulAxis axis,
                                                   std::span<const double> values) {
    std::vector<std::pair<double, double>> out;
    out.reserve(values.size());
    for (double v : values) {
        out.emplace_back(v, fronthaul_rate_dl_bps(with_axis_value(base, axis, v)));
    }
    return out;
}

}  // namespace thzfh
