// SPDX-License-Identifier: Apache-2.0

#include "muran/radio.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace muran {

namespace {

constexpr double kSpeedOfLight = 299792458.0;

double free_space_db(double distance_m, double carrier_hz)
{
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * carrier_hz / kSpeedOfLight);
}

void require(bool ok, const char *field, const char *what)
{
    if (!ok)
        throw std::invalid_argument(fmt::format("radio.{}: {}", field, what));
}

bool finite(double v)
{
    return std::isfinite(v);
}

} // namespace

std::vector<McsEntry> default_mcs_table()
{
    static const double se[] = {0.385, 0.770, 0.9625, 1.155, 1.25125, 1.540,
                                1.925, 2.310, 2.5025, 3.080, 3.850,   4.620};
    std::vector<McsEntry> t;
    for (int i = 0; i < 12; ++i)
        t.push_back({-1.0 + 2.0 * i, se[i]});
    return t;
}

std::vector<McsEntry> parse_mcs_csv(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<McsEntry> t;
    bool header = true;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (header)
        {
            header = false;
            if (line != "snr_threshold_db,se_bps_hz")
                throw std::invalid_argument("MCS CSV header must be 'snr_threshold_db,se_bps_hz'");
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument(fmt::format("MCS CSV line {}: expected two columns", line_no));
        McsEntry e;
        try
        {
            std::size_t used = 0;
            const std::string a = line.substr(0, comma);
            const std::string b = line.substr(comma + 1);
            e.snr_threshold_db = std::stod(a, &used);
            if (used != a.size())
                throw std::invalid_argument("trailing characters");
            e.se_bps_hz = std::stod(b, &used);
            if (used != b.size())
                throw std::invalid_argument("trailing characters");
        }
        catch (const std::exception &)
        {
            throw std::invalid_argument(fmt::format("MCS CSV line {}: malformed number", line_no));
        }
        t.push_back(e);
    }
    if (t.empty())
        throw std::invalid_argument("MCS CSV has no rows");
    return t;
}

std::vector<McsEntry> load_mcs_csv(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error(fmt::format("cannot read MCS table '{}'", path));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_mcs_csv(ss.str());
}

void RadioParams::validate() const
{
    require(lte_bandwidth_hz > 0.0 && finite(lte_bandwidth_hz), "lte_bandwidth_hz", "must be positive");
    require(lte_carrier_hz > 0.0 && finite(lte_carrier_hz), "lte_carrier_hz", "must be positive");
    require(finite(lte_antenna_gain_dbi), "lte_antenna_gain_dbi", "must be finite");
    require(finite(lte_tx_power_dbm), "lte_tx_power_dbm", "must be finite");
    require(lte_beamwidth_deg > 0.0 && lte_beamwidth_deg <= 360.0, "lte_beamwidth_deg", "must be in (0, 360]");
    require(lte_front_to_back_db >= 0.0 && finite(lte_front_to_back_db), "lte_front_to_back_db",
            "must be nonnegative");
    require(lte_max_se_bps_hz > 0.0 && finite(lte_max_se_bps_hz), "lte_max_se_bps_hz", "must be positive");
    require(mmw_channel_bandwidth_hz > 0.0 && finite(mmw_channel_bandwidth_hz), "mmw_channel_bandwidth_hz",
            "must be positive");
    require(mmw_n_channels >= 1, "mmw_n_channels", "must be at least 1");
    require(mmw_carrier_hz > 0.0 && finite(mmw_carrier_hz), "mmw_carrier_hz", "must be positive");
    require(finite(mmw_antenna_gain_dbi), "mmw_antenna_gain_dbi", "must be finite");
    require(finite(mmw_tx_power_dbm), "mmw_tx_power_dbm", "must be finite");
    require(mmw_beamwidth_deg > 0.0 && mmw_beamwidth_deg <= 360.0, "mmw_beamwidth_deg", "must be in (0, 360]");
    require(mmw_ref_distance_m > 0.0 && finite(mmw_ref_distance_m), "mmw_ref_distance_m", "must be positive");
    require(mmw_path_loss_exponent >= 0.0 && finite(mmw_path_loss_exponent), "mmw_path_loss_exponent",
            "must be nonnegative");
    require(mmw_oxygen_db_per_km >= 0.0 && finite(mmw_oxygen_db_per_km), "mmw_oxygen_db_per_km",
            "must be nonnegative");
    require(!mmw_mcs.empty(), "mmw_mcs", "must have at least one entry");
    for (std::size_t i = 0; i < mmw_mcs.size(); ++i)
    {
        require(finite(mmw_mcs[i].snr_threshold_db), "mmw_mcs", "thresholds must be finite");
        require(mmw_mcs[i].se_bps_hz > 0.0 && finite(mmw_mcs[i].se_bps_hz), "mmw_mcs",
                "spectral efficiencies must be positive");
        if (i > 0)
        {
            require(mmw_mcs[i].snr_threshold_db > mmw_mcs[i - 1].snr_threshold_db, "mmw_mcs",
                    "thresholds must be strictly increasing");
            require(mmw_mcs[i].se_bps_hz >= mmw_mcs[i - 1].se_bps_hz, "mmw_mcs",
                    "spectral efficiency must be nondecreasing");
        }
    }
    require(finite(noise_density_dbm_hz), "noise_density_dbm_hz", "must be finite");
    require(finite(ue_antenna_gain_dbi), "ue_antenna_gain_dbi", "must be finite");
    require(ue_height_m > 0.0 && finite(ue_height_m), "ue_height_m", "must be positive");
}

AntennaPattern AntennaPattern::three_gpp_sector(double peak_gain_dbi, double beamwidth_deg,
                                                double front_to_back_db)
{
    return {PatternKind::ThreeGppSector, peak_gain_dbi, beamwidth_deg, front_to_back_db};
}

AntennaPattern AntennaPattern::mmw_beam(double peak_gain_dbi, double beamwidth_deg)
{
    // 802.11ad evaluation methodology: side lobe = -0.4111 ln(theta_3dB) - 10.579 dBi.
    const double side_lobe = -0.4111 * std::log(beamwidth_deg) - 10.579;
    return {PatternKind::MmwBeam, peak_gain_dbi, beamwidth_deg, std::max(0.0, peak_gain_dbi - side_lobe)};
}

double path_loss_db(LinkKind kind, double distance_m, const RadioParams &params)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path loss distance must be positive");
    if (kind == LinkKind::LteAccess)
        return 128.1 + 37.6 * std::log10(distance_m / 1000.0);

    const double d0 = params.mmw_ref_distance_m;
    const double oxygen = params.mmw_oxygen_db_per_km * distance_m / 1000.0;
    if (distance_m <= d0)
        return free_space_db(distance_m, params.mmw_carrier_hz) + oxygen;
    return free_space_db(d0, params.mmw_carrier_hz) + 10.0 * params.mmw_path_loss_exponent * std::log10(distance_m / d0) +
           oxygen;
}

double antenna_gain_dbi(const AntennaPattern &pattern, double offset_deg)
{
    const double theta = wrap_deg(offset_deg);
    const double ratio = theta / pattern.beamwidth_deg;
    const double attenuation = std::min(12.0 * ratio * ratio, pattern.front_to_back_db);
    return pattern.peak_gain_dbi - attenuation;
}

double noise_floor_dbm(LinkKind kind, const RadioParams &params)
{
    const double bw = kind == LinkKind::LteAccess ? params.lte_bandwidth_hz : params.mmw_channel_bandwidth_hz;
    return params.noise_density_dbm_hz + 10.0 * std::log10(bw);
}

double LinkBudget::recompute_snr_db() const
{
    return tx_power_dbm + tx_gain_dbi + rx_gain_dbi - path_loss_db - noise_dbm;
}

namespace {

LinkBudget finish_budget(LinkBudget b, const RadioParams &params)
{
    b.path_loss_db = path_loss_db(b.kind, b.distance_m, params);
    b.noise_dbm = noise_floor_dbm(b.kind, params);
    b.snr_db = b.recompute_snr_db();
    b.rate_bps = link_rate(b.snr_db, b.kind, params);
    return b;
}

double lte_sector_gain(const Site &tx, Vec2 target, const RadioParams &params)
{
    const AntennaPattern pat =
        AntennaPattern::three_gpp_sector(params.lte_antenna_gain_dbi, params.lte_beamwidth_deg, params.lte_front_to_back_db);
    const int n = std::max(1, tx.n_sectors);
    const double az = azimuth_deg(tx.position, target);
    const int sector = sector_for_azimuth(az, n);
    return antenna_gain_dbi(pat, az - sector_boresight_deg(sector, n));
}

} // namespace

LinkBudget link_budget(const Site &tx, const Site &rx, const RadioParams &params, LinkKind kind)
{
    if (tx.position == rx.position && tx.height_m == rx.height_m)
        throw std::invalid_argument(fmt::format("sites {} and {} are co-located", tx.id, rx.id));
    LinkBudget b;
    b.tx_site = tx.id;
    b.rx_site = rx.id;
    b.kind = kind;
    b.distance_m = distance3d(tx.position, tx.height_m, rx.position, rx.height_m);
    if (kind == LinkKind::MmwLink)
    {
        b.tx_power_dbm = params.mmw_tx_power_dbm;
        b.tx_gain_dbi = params.mmw_antenna_gain_dbi;
        b.rx_gain_dbi = params.mmw_antenna_gain_dbi;
    }
    else
    {
        b.tx_power_dbm = params.lte_tx_power_dbm;
        b.tx_gain_dbi = lte_sector_gain(tx, rx.position, params);
        b.rx_gain_dbi = params.ue_antenna_gain_dbi;
    }
    return finish_budget(b, params);
}

double link_snr(const Site &tx, const Site &rx, const RadioParams &params, LinkKind kind)
{
    return link_budget(tx, rx, params, kind).snr_db;
}

LinkBudget access_budget(const Site &tx, Vec2 user_position, const RadioParams &params, LinkKind kind)
{
    LinkBudget b;
    b.tx_site = tx.id;
    b.kind = kind;
    b.distance_m = distance3d(tx.position, tx.height_m, user_position, params.ue_height_m);
    if (!(b.distance_m > 0.0))
        throw std::invalid_argument("user co-located with transmitter");
    b.rx_gain_dbi = params.ue_antenna_gain_dbi;
    if (kind == LinkKind::MmwLink)
    {
        b.tx_power_dbm = params.mmw_tx_power_dbm;
        b.tx_gain_dbi = params.mmw_antenna_gain_dbi;
    }
    else
    {
        b.tx_power_dbm = params.lte_tx_power_dbm;
        b.tx_gain_dbi = lte_sector_gain(tx, user_position, params);
    }
    return finish_budget(b, params);
}

double link_rate(double snr_db, LinkKind kind, const RadioParams &params)
{
    if (std::isnan(snr_db) || snr_db == -std::numeric_limits<double>::infinity())
        return 0.0;
    if (kind == LinkKind::LteAccess)
    {
        const double se = std::min(std::log2(1.0 + std::pow(10.0, snr_db / 10.0)), params.lte_max_se_bps_hz);
        return params.lte_bandwidth_hz * se;
    }
    double se = 0.0;
    for (const McsEntry &e : params.mmw_mcs)
    {
        if (snr_db >= e.snr_threshold_db)
            se = e.se_bps_hz;
        else
            break;
    }
    return se * params.mmw_channel_bandwidth_hz * params.mmw_n_channels;
}

} // namespace muran
