/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include "thzfh/link_budget.hpp"

#include <cmath>
#include <numbers>

#include "thzfh/units.hpp"

namespace thzfh {

void RfParams::validate() const {
    check_positive(carrier_frequency_hz, "carrier_frequency_hz");
    check_positive(antenna_temperature_k, "antenna_temperature_k");
    check_non_negative(excess_loss_db, "excess_loss_db");
    check_non_negative(rx_noise_figure_db, "rx_noise_figure_db");
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(tx_antenna_gain_dbi) ||
        !std::isfinite(rx_antenna_gain_dbi)) {
        throw std::invalid_argument("tx_power_dbm and antenna gains must be finite");
    }
}

void LinkBudgetInput::validate() const {
    rf.validate();
    check_positive(distance_m, "distance_m");
}

double fspl_db(double frequency_hz, double distance_m) {
    check_positive(frequency_hz, "frequency_hz");
    check_positive(distance_m, "distance_m");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / kSpeedOfLight);
}

double received_power_dbm(const LinkBudgetInput& input) {
    input.validate();
    return input.rf.tx_power_dbm + input.rf.tx_antenna_gain_dbi + input.rf.rx_antenna_gain_dbi -
           fspl_db(input.rf.carrier_frequency_hz, input.distance_m) - input.rf.excess_loss_db;
}

double noise_spectral_density_mw_per_hz(double antenna_temperature_k, double noise_figure_db) {
    check_positive(antenna_temperature_k, "antenna_temperature_k");
    check_non_negative(noise_figure_db, "noise_figure_db");
    // k_B*T is W/Hz; *1e3 converts to mW/Hz
    return kBoltzmann * antenna_temperature_k * db_to_linear(noise_figure_db) * 1e3;
}

double max_bandwidth_for_cnr_hz(double rx_power_dbm, double cnr_db, double noise_density_mw_per_hz) {
    check_positive(noise_density_mw_per_hz, "noise_density_mw_per_hz");
    return db_to_linear(rx_power_dbm - cnr_db) / noise_density_mw_per_hz;
}

double cnr_at_bandwidth_db(double rx_power_dbm, double bandwidth_hz, double noise_density_mw_per_hz) {
    check_positive(bandwidth_hz, "bandwidth_hz");
    check_positive(noise_density_mw_per_hz, "noise_density_mw_per_hz");
    return rx_power_dbm - linear_to_db(noise_density_mw_per_hz * bandwidth_hz);
}

LinkBudgetReport link_report(const LinkBudgetInput& input) {
    input.validate();
    LinkBudgetReport rep;
    rep.fspl_db = fspl_db(input.rf.carrier_frequency_hz, input.distance_m);
    rep.rx_power_dbm = input.rf.tx_power_dbm + input.rf.tx_antenna_gain_dbi +
                       input.rf.rx_antenna_gain_dbi - rep.fspl_db - input.rf.excess_loss_db;
    rep.noise_density_mw_per_hz =
        noise_spectral_density_mw_per_hz(input.rf.antenna_temperature_k, input.rf.rx_noise_figure_db);
    return rep;
}

}  // namespace thzfh
