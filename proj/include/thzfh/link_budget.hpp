/*
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef THZFH_LINK_BUDGET_HPP
#define THZFH_LINK_BUDGET_HPP

namespace thzfh {

/// RF parameters of a point-to-point transceiver pair, without geometry.
/// Reused as a template wherever the same hardware serves several hops.
struct RfParams {
    double carrier_frequency_hz   = 0.0;
    double tx_power_dbm           = 0.0;
    double tx_antenna_gain_dbi    = 0.0;
    double rx_antenna_gain_dbi    = 0.0;
    double excess_loss_db         = 0.0;  // atmospheric + weather margin + packaging
    double rx_noise_figure_db     = 0.0;
    double antenna_temperature_k  = 290.0;

    void validate() const;  // throws std::invalid_argument
};

/// RfParams plus a concrete path length.
struct LinkBudgetInput {
    RfParams rf;
    double distance_m = 0.0;

    void validate() const;
};

struct LinkBudgetReport {
    double fspl_db;
    double rx_power_dbm;
    double noise_density_mw_per_hz;
};

/// Free-space path loss, 20*log10(4*pi*d*f/c).
double fspl_db(double frequency_hz, double distance_m);

/// tx_power + both antenna gains - FSPL - excess loss, all in the dB domain.
double received_power_dbm(const LinkBudgetInput& input);

/// One-sided receiver noise power spectral density, k_B * T * 10^(NF/10), in mW/Hz.
double noise_spectral_density_mw_per_hz(double antenna_temperature_k, double noise_figure_db);

/// Largest bandwidth supporting the requested carrier-to-noise ratio:
/// BW = 10^((P_RX - CNR)/10) mW / S_AWGN.
double max_bandwidth_for_cnr_hz(double rx_power_dbm, double cnr_db, double noise_density_mw_per_hz);

/// CNR obtained over a given bandwidth; exact inverse of max_bandwidth_for_cnr_hz.
double cnr_at_bandwidth_db(double rx_power_dbm, double bandwidth_hz, double noise_density_mw_per_hz);

/// Full derived budget for one link.
LinkBudgetReport link_report(const LinkBudgetInput& input);

}  // namespace thzfh

#endif
