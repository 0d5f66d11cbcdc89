// SPDX-License-Identifier: Apache-2.0
//
// Link budgets for LTE access, mmWave access and mmWave backhaul.
//
// All links are line-of-sight and deterministic; no fading, blockage or
// inter-beam interference is modelled at system level, so SINR == SNR.

#ifndef MURAN_RADIO_HPP
#define MURAN_RADIO_HPP

#include "muran/geometry.hpp"
#include "muran/scenario.hpp"

#include <string>
#include <vector>

namespace muran {

enum class LinkKind
{
    LteAccess,
    MmwLink
};

struct McsEntry
{
    double snr_threshold_db = 0.0;
    double se_bps_hz = 0.0;
};

// IEEE 802.11ad single-carrier MCS 1..12 (rates in Gbps read as bps/Hz),
// thresholds from -1 dB in 2 dB steps.
std::vector<McsEntry> default_mcs_table();

// CSV with header "snr_threshold_db,se_bps_hz"; rows sorted by threshold.
std::vector<McsEntry> load_mcs_csv(const std::string &path);
std::vector<McsEntry> parse_mcs_csv(const std::string &text);

struct RadioParams
{
    // LTE macro
    double lte_bandwidth_hz = 10.0e6;
    double lte_carrier_hz = 2.0e9;
    double lte_antenna_gain_dbi = 17.0;
    double lte_tx_power_dbm = 46.0;
    double lte_beamwidth_deg = 65.0;
    double lte_front_to_back_db = 25.0;
    double lte_max_se_bps_hz = 6.0;

    // mmWave (access and backhaul)
    double mmw_channel_bandwidth_hz = 2.16e9;
    int mmw_n_channels = 2;
    double mmw_carrier_hz = 60.0e9;
    double mmw_antenna_gain_dbi = 26.0;
    double mmw_tx_power_dbm = 10.0;
    double mmw_beamwidth_deg = 6.0;
    double mmw_ref_distance_m = 5.0;
    double mmw_path_loss_exponent = 2.36;
    double mmw_oxygen_db_per_km = 15.0;
    std::vector<McsEntry> mmw_mcs = default_mcs_table();

    double noise_density_dbm_hz = -174.0;

    // User equipment
    double ue_antenna_gain_dbi = 0.0;
    double ue_height_m = 1.5;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

enum class PatternKind
{
    ThreeGppSector,
    MmwBeam
};

struct AntennaPattern
{
    PatternKind kind = PatternKind::ThreeGppSector;
    double peak_gain_dbi = 0.0;
    double beamwidth_deg = 65.0;
    double front_to_back_db = 25.0;

    static AntennaPattern three_gpp_sector(double peak_gain_dbi, double beamwidth_deg = 65.0,
                                           double front_to_back_db = 25.0);
    // Floor set from the 802.11ad reference side-lobe level for the given
    // half-power beamwidth.
    static AntennaPattern mmw_beam(double peak_gain_dbi, double beamwidth_deg);
};

double path_loss_db(LinkKind kind, double distance_m, const RadioParams &params);

// Parabolic main lobe in dB, -3 dB at +/- beamwidth/2, floored at
// peak - front_to_back.
double antenna_gain_dbi(const AntennaPattern &pattern, double offset_deg);

double noise_floor_dbm(LinkKind kind, const RadioParams &params);

struct LinkBudget
{
    int tx_site = -1;
    int rx_site = -1; // -1 when the receiver is a user
    LinkKind kind = LinkKind::MmwLink;
    double distance_m = 0.0;
    double tx_power_dbm = 0.0;
    double path_loss_db = 0.0;
    double tx_gain_dbi = 0.0;
    double rx_gain_dbi = 0.0;
    double noise_dbm = 0.0;
    double snr_db = 0.0;
    double rate_bps = 0.0;

    // SNR rebuilt from the stored components.
    double recompute_snr_db() const;
};

// Site-to-site budget. mmWave beams are steered to boresight at both ends.
// LTE links use the transmitting macro's sector pattern and the UE gain at
// the receiver.
LinkBudget link_budget(const Site &tx, const Site &rx, const RadioParams &params, LinkKind kind);
double link_snr(const Site &tx, const Site &rx, const RadioParams &params, LinkKind kind);

// Site-to-user access budget (receiver at UE height with UE gain).
LinkBudget access_budget(const Site &tx, Vec2 user_position, const RadioParams &params, LinkKind kind);

double link_rate(double snr_db, LinkKind kind, const RadioParams &params);

} // namespace muran

#endif
