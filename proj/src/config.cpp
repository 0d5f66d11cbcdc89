// SPDX-License-Identifier: Apache-2.0

#include "muran/config.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <set>
#include <sstream>

namespace muran {

using nlohmann::json;

namespace {

constexpr int kMaxUsers = 1'000'000;
constexpr int kMaxScbs = 5'000;
constexpr int kMaxDraws = 10'000'000;
constexpr int kMaxThreads = 256;
constexpr std::size_t kMaxSnrPoints = 10'001;

std::string join(const std::string &prefix, const std::string &key)
{
    return prefix.empty() ? key : prefix + "." + key;
}

class Reader
{
  public:
    explicit Reader(std::vector<Diagnostic> &diags) : diags_(diags) {}

    void add(std::string key, std::string message) { diags_.push_back({std::move(key), std::move(message)}); }

    const json *section(const json &parent, const std::string &key)
    {
        const auto it = parent.find(key);
        if (it == parent.end())
            return nullptr;
        if (!it->is_object())
        {
            add(key, "must be an object");
            return nullptr;
        }
        return &*it;
    }

    void known_keys(const json &obj, const std::string &prefix, std::initializer_list<const char *> keys)
    {
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return it.key() == k; }))
                add(join(prefix, it.key()), "unknown key");
    }

    void number(const json *obj, const std::string &prefix, const char *key, double &out)
    {
        if (!obj)
            return;
        const auto it = obj->find(key);
        if (it == obj->end())
            return;
        if (!it->is_number())
            add(join(prefix, key), "must be a number");
        else
            out = it->get<double>();
    }

    void integer(const json *obj, const std::string &prefix, const char *key, int &out, long long lo, long long hi)
    {
        if (!obj)
            return;
        const auto it = obj->find(key);
        if (it == obj->end())
            return;
        if (!it->is_number_integer())
        {
            add(join(prefix, key), "must be an integer");
            return;
        }
        const bool is_unsigned = it->is_number_unsigned();
        if (is_unsigned && it->get<unsigned long long>() > static_cast<unsigned long long>(hi))
        {
            add(join(prefix, key), fmt::format("must be between {} and {}", lo, hi));
            return;
        }
        const long long v = it->get<long long>();
        if (v < lo || v > hi)
        {
            add(join(prefix, key), fmt::format("must be between {} and {}", lo, hi));
            return;
        }
        out = static_cast<int>(v);
    }

    void boolean(const json *obj, const std::string &prefix, const char *key, bool &out)
    {
        if (!obj)
            return;
        const auto it = obj->find(key);
        if (it == obj->end())
            return;
        if (!it->is_boolean())
            add(join(prefix, key), "must be true or false");
        else
            out = it->get<bool>();
    }

    void string(const json *obj, const std::string &prefix, const char *key, std::string &out)
    {
        if (!obj)
            return;
        const auto it = obj->find(key);
        if (it == obj->end())
            return;
        if (!it->is_string())
            add(join(prefix, key), "must be a string");
        else
            out = it->get<std::string>();
    }

  private:
    std::vector<Diagnostic> &diags_;
};

// Module validators report "section.field: message"; split that back into a
// keyed diagnostic.
void keyed_from_exception(Reader &r, const std::exception &e, const std::string &fallback_key)
{
    const std::string what = e.what();
    const auto colon = what.find(": ");
    if (colon != std::string::npos && what.find('.') < colon && what.find(' ') > colon)
        r.add(what.substr(0, colon), what.substr(colon + 2));
    else
        r.add(fallback_key, what);
}

void read_scenario(Reader &r, const json *s, ScenarioConfig &c)
{
    if (s)
        r.known_keys(*s, "scenario",
                     {"side_m", "macro_isd_m", "n_scbs", "n_users", "placement", "min_separation_m",
                      "sectors_per_scbs", "macro_height_m", "scbs_height_m", "user_mean_demand_bps"});
    r.number(s, "scenario", "side_m", c.area.side_m);
    r.number(s, "scenario", "macro_isd_m", c.area.macro_isd_m);
    r.integer(s, "scenario", "n_scbs", c.n_scbs, 0, kMaxScbs);
    r.integer(s, "scenario", "n_users", c.n_users, 0, kMaxUsers);
    r.number(s, "scenario", "min_separation_m", c.min_separation_m);
    r.integer(s, "scenario", "sectors_per_scbs", c.sectors_per_scbs, 0, 1000);
    r.number(s, "scenario", "macro_height_m", c.macro_height_m);
    r.number(s, "scenario", "scbs_height_m", c.scbs_height_m);
    r.number(s, "scenario", "user_mean_demand_bps", c.user_mean_demand_bps);
    std::string placement = c.placement == Placement::Grid ? "grid" : "uniform";
    r.string(s, "scenario", "placement", placement);
    if (placement == "grid")
        c.placement = Placement::Grid;
    else if (placement == "uniform")
        c.placement = Placement::UniformRandom;
    else
        r.add("scenario.placement", "must be \"uniform\" or \"grid\"");

    if (!(c.area.side_m > 0.0) || !std::isfinite(c.area.side_m))
        r.add("scenario.side_m", "must be positive");
    if (!(c.area.macro_isd_m > 0.0) || !std::isfinite(c.area.macro_isd_m))
        r.add("scenario.macro_isd_m", "must be positive");
    else if (c.area.side_m > 0.0 && c.area.evaluation_cell().circumradius() > 0.5 * c.area.side_m)
        r.add("scenario.macro_isd_m", "evaluation cell does not fit inside the area");
    if (!(c.min_separation_m >= 0.0) || !std::isfinite(c.min_separation_m))
        r.add("scenario.min_separation_m", "must be nonnegative");
    if (c.sectors_per_scbs != 3 && c.sectors_per_scbs != 4)
        r.add("scenario.sectors_per_scbs", "must be 3 or 4");
    if (!(c.macro_height_m > 0.0) || !std::isfinite(c.macro_height_m))
        r.add("scenario.macro_height_m", "must be positive");
    if (!(c.scbs_height_m > 0.0) || !std::isfinite(c.scbs_height_m))
        r.add("scenario.scbs_height_m", "must be positive");
    if (!(c.user_mean_demand_bps >= 0.0) || !std::isfinite(c.user_mean_demand_bps))
        r.add("scenario.user_mean_demand_bps", "must be nonnegative");
}

void read_traffic(Reader &r, const json *t, TrafficProfile &p)
{
    if (!t)
        return;
    r.known_keys(*t, "traffic",
                 {"scale_factor", "peak_area_demand_bps", "jitter_sigma", "hourly_multiplier", "hotspots"});
    r.number(t, "traffic", "scale_factor", p.scale_factor);
    r.number(t, "traffic", "peak_area_demand_bps", p.peak_area_demand_bps);
    r.number(t, "traffic", "jitter_sigma", p.jitter_sigma);
    if (!(p.scale_factor >= 0.0) || !std::isfinite(p.scale_factor))
        r.add("traffic.scale_factor", "must be nonnegative");
    if (!(p.peak_area_demand_bps >= 0.0) || !std::isfinite(p.peak_area_demand_bps))
        r.add("traffic.peak_area_demand_bps", "must be nonnegative");
    if (!(p.jitter_sigma >= 0.0) || !std::isfinite(p.jitter_sigma))
        r.add("traffic.jitter_sigma", "must be nonnegative");

    if (const auto it = t->find("hourly_multiplier"); it != t->end())
    {
        if (!it->is_array() || it->size() != 24)
            r.add("traffic.hourly_multiplier", "must be an array of exactly 24 numbers");
        else
        {
            double peak = 0.0;
            bool ok = true;
            for (std::size_t h = 0; h < 24; ++h)
            {
                const json &v = (*it)[h];
                if (!v.is_number() || !(v.get<double>() >= 0.0 && v.get<double>() <= 1.0))
                {
                    r.add(fmt::format("traffic.hourly_multiplier[{}]", h), "must be a number in [0, 1]");
                    ok = false;
                    continue;
                }
                p.hourly_multiplier[h] = v.get<double>();
                peak = std::max(peak, p.hourly_multiplier[h]);
            }
            if (ok && peak != 1.0)
                r.add("traffic.hourly_multiplier", "maximum entry must be exactly 1");
        }
    }

    if (const auto it = t->find("hotspots"); it != t->end())
    {
        if (!it->is_array())
        {
            r.add("traffic.hotspots", "must be an array");
            return;
        }
        p.hotspots.clear();
        double total = 0.0;
        for (std::size_t i = 0; i < it->size(); ++i)
        {
            const std::string prefix = fmt::format("traffic.hotspots[{}]", i);
            const json &h = (*it)[i];
            if (!h.is_object())
            {
                r.add(prefix, "must be an object");
                continue;
            }
            r.known_keys(h, prefix, {"x", "y", "radius_m", "weight"});
            Hotspot hs;
            r.number(&h, prefix, "x", hs.center.x);
            r.number(&h, prefix, "y", hs.center.y);
            r.number(&h, prefix, "radius_m", hs.radius_m);
            r.number(&h, prefix, "weight", hs.weight);
            if (!std::isfinite(hs.center.x) || !std::isfinite(hs.center.y))
                r.add(prefix, "center must be finite");
            if (!(hs.radius_m > 0.0) || !std::isfinite(hs.radius_m))
                r.add(prefix + ".radius_m", "must be positive");
            if (!(hs.weight >= 0.0) || !std::isfinite(hs.weight))
                r.add(prefix + ".weight", "must be nonnegative");
            else
                total += hs.weight;
            p.hotspots.push_back(hs);
        }
        if (total > 1.0 + 1e-12)
            r.add("traffic.hotspots", "weights must sum to at most 1");
    }
}

void read_radio(Reader &r, const json *s, RadioParams &p, const std::string &base_dir)
{
    if (!s)
        return;
    r.known_keys(*s, "radio",
                 {"lte_bandwidth_hz", "lte_carrier_hz", "lte_antenna_gain_dbi", "lte_tx_power_dbm",
                  "lte_beamwidth_deg", "lte_front_to_back_db", "lte_max_se_bps_hz", "mmw_channel_bandwidth_hz",
                  "mmw_n_channels", "mmw_carrier_hz", "mmw_antenna_gain_dbi", "mmw_tx_power_dbm",
                  "mmw_beamwidth_deg", "mmw_ref_distance_m", "mmw_path_loss_exponent", "mmw_oxygen_db_per_km",
                  "noise_density_dbm_hz", "ue_antenna_gain_dbi", "ue_height_m", "mmw_mcs", "mcs_csv"});
    r.number(s, "radio", "lte_bandwidth_hz", p.lte_bandwidth_hz);
    r.number(s, "radio", "lte_carrier_hz", p.lte_carrier_hz);
    r.number(s, "radio", "lte_antenna_gain_dbi", p.lte_antenna_gain_dbi);
    r.number(s, "radio", "lte_tx_power_dbm", p.lte_tx_power_dbm);
    r.number(s, "radio", "lte_beamwidth_deg", p.lte_beamwidth_deg);
    r.number(s, "radio", "lte_front_to_back_db", p.lte_front_to_back_db);
    r.number(s, "radio", "lte_max_se_bps_hz", p.lte_max_se_bps_hz);
    r.number(s, "radio", "mmw_channel_bandwidth_hz", p.mmw_channel_bandwidth_hz);
    r.integer(s, "radio", "mmw_n_channels", p.mmw_n_channels, 1, 64);
    r.number(s, "radio", "mmw_carrier_hz", p.mmw_carrier_hz);
    r.number(s, "radio", "mmw_antenna_gain_dbi", p.mmw_antenna_gain_dbi);
    r.number(s, "radio", "mmw_tx_power_dbm", p.mmw_tx_power_dbm);
    r.number(s, "radio", "mmw_beamwidth_deg", p.mmw_beamwidth_deg);
    r.number(s, "radio", "mmw_ref_distance_m", p.mmw_ref_distance_m);
    r.number(s, "radio", "mmw_path_loss_exponent", p.mmw_path_loss_exponent);
    r.number(s, "radio", "mmw_oxygen_db_per_km", p.mmw_oxygen_db_per_km);
    r.number(s, "radio", "noise_density_dbm_hz", p.noise_density_dbm_hz);
    r.number(s, "radio", "ue_antenna_gain_dbi", p.ue_antenna_gain_dbi);
    r.number(s, "radio", "ue_height_m", p.ue_height_m);
    if (const auto it = s->find("mmw_mcs"); it != s->end())
    {
        // Inline table: [[snr_threshold_db, se_bps_hz], ...]
        std::vector<McsEntry> table;
        bool ok = it->is_array();
        for (std::size_t i = 0; ok && i < it->size(); ++i)
        {
            const json &row = (*it)[i];
            ok = row.is_array() && row.size() == 2 && row[0].is_number() && row[1].is_number();
            if (ok)
                table.push_back({row[0].get<double>(), row[1].get<double>()});
        }
        if (ok)
            p.mmw_mcs = std::move(table);
        else
            r.add("radio.mmw_mcs", "must be an array of [snr_threshold_db, se_bps_hz] pairs");
    }
    std::string mcs_path;
    r.string(s, "radio", "mcs_csv", mcs_path);
    if (!mcs_path.empty() && s->contains("mmw_mcs"))
        r.add("radio.mcs_csv", "cannot be combined with radio.mmw_mcs");
    if (!mcs_path.empty())
    {
        std::filesystem::path path(mcs_path);
        if (path.is_relative())
            path = std::filesystem::path(base_dir) / path;
        try
        {
            p.mmw_mcs = load_mcs_csv(path.string());
        }
        catch (const std::exception &e)
        {
            r.add("radio.mcs_csv", e.what());
        }
    }
    try
    {
        p.validate();
    }
    catch (const std::exception &e)
    {
        keyed_from_exception(r, e, "radio");
    }
}

void read_power(Reader &r, const json *s, PowerModel &model)
{
    double on = model.p_on_w();
    double off = model.p_off_w();
    if (s)
        r.known_keys(*s, "power", {"p_on", "p_off"});
    r.number(s, "power", "p_on", on);
    r.number(s, "power", "p_off", off);
    bool ok = true;
    if (!std::isfinite(on) || !(on > 0.0))
    {
        r.add("power.p_on", "must be positive");
        ok = false;
    }
    if (!std::isfinite(off) || !(off >= 0.0))
    {
        r.add("power.p_off", "must be nonnegative");
        ok = false;
    }
    else if (ok && !(off < on))
    {
        r.add("power.p_off", "must be below power.p_on");
        ok = false;
    }
    if (ok)
        model = PowerModel(on, off);
}

void read_linklevel(Reader &r, const json *s, LinkLevelSweep &ll)
{
    if (!s)
        return;
    r.known_keys(*s, "linklevel",
                 {"enabled", "k_factor_db", "carrier_hz", "code_rate", "n_tx", "n_rx", "xpd_db", "cc_bandwidth_hz",
                  "n_cc", "max_bits_per_symbol", "overhead_factor", "snr_start_db", "snr_stop_db", "snr_step_db",
                  "n_draws"});
    LinkLevelParams &p = ll.params;
    r.boolean(s, "linklevel", "enabled", ll.enabled);
    r.number(s, "linklevel", "k_factor_db", p.k_factor_db);
    r.number(s, "linklevel", "carrier_hz", p.carrier_hz);
    r.number(s, "linklevel", "code_rate", p.code_rate);
    r.integer(s, "linklevel", "n_tx", p.n_tx, 1, 16);
    r.integer(s, "linklevel", "n_rx", p.n_rx, 1, 16);
    r.number(s, "linklevel", "xpd_db", p.xpd_db);
    r.number(s, "linklevel", "cc_bandwidth_hz", p.cc_bandwidth_hz);
    r.integer(s, "linklevel", "n_cc", p.n_cc, std::numeric_limits<int>::min(), std::numeric_limits<int>::max());
    r.number(s, "linklevel", "max_bits_per_symbol", p.max_bits_per_symbol);
    r.number(s, "linklevel", "overhead_factor", p.overhead_factor);
    r.number(s, "linklevel", "snr_start_db", ll.snr_start_db);
    r.number(s, "linklevel", "snr_stop_db", ll.snr_stop_db);
    r.number(s, "linklevel", "snr_step_db", ll.snr_step_db);
    r.integer(s, "linklevel", "n_draws", ll.n_draws, 1, kMaxDraws);

    if (p.n_cc < 1 || p.n_cc > LinkLevelParams::kMaxComponentCarriers)
        r.add("linklevel.n_cc", "must be between 1 and 8 (at most eight component carriers)");
    else
        try
        {
            p.validate();
        }
        catch (const std::exception &e)
        {
            keyed_from_exception(r, e, "linklevel");
        }
    if (!std::isfinite(ll.snr_start_db))
        r.add("linklevel.snr_start_db", "must be finite");
    if (!std::isfinite(ll.snr_stop_db) || ll.snr_stop_db < ll.snr_start_db)
        r.add("linklevel.snr_stop_db", "must be finite and not below snr_start_db");
    if (!(ll.snr_step_db > 0.0) || !std::isfinite(ll.snr_step_db))
        r.add("linklevel.snr_step_db", "must be positive");
    else if ((ll.snr_stop_db - ll.snr_start_db) / ll.snr_step_db + 1.0 > static_cast<double>(kMaxSnrPoints))
        r.add("linklevel.snr_step_db", fmt::format("grid would exceed {} points", kMaxSnrPoints));
}

} // namespace

std::vector<double> LinkLevelSweep::grid() const
{
    std::vector<double> g;
    if (!(snr_step_db > 0.0))
        return g;
    const auto n = static_cast<long long>(std::floor((snr_stop_db - snr_start_db) / snr_step_db + 1e-9)) + 1;
    for (long long i = 0; i < n; ++i)
        g.push_back(snr_start_db + static_cast<double>(i) * snr_step_db);
    return g;
}

ExperimentConfig::ExperimentConfig()
{
    hours.resize(24);
    for (int h = 0; h < 24; ++h)
        hours[static_cast<std::size_t>(h)] = h;
}

ConfigLoad parse_config(const json &doc, const std::string &base_dir)
{
    ConfigLoad out;
    Reader r(out.diagnostics);
    if (!doc.is_object())
    {
        r.add("", "configuration must be a JSON object");
        return out;
    }
    r.known_keys(doc, "",
                 {"seed", "threads", "policies", "hours", "scenario", "traffic", "radio", "power", "mesh",
                  "linklevel"});

    ExperimentConfig c;
    if (const auto it = doc.find("seed"); it != doc.end())
    {
        if (it->is_number_unsigned())
            c.seed = it->get<std::uint64_t>();
        else if (it->is_number_integer() && it->get<std::int64_t>() >= 0)
            c.seed = static_cast<std::uint64_t>(it->get<std::int64_t>());
        else
            r.add("seed", "must be a nonnegative integer");
    }
    r.integer(&doc, "", "threads", c.threads, 1, kMaxThreads);

    if (const auto it = doc.find("policies"); it != doc.end())
    {
        if (!it->is_array() || it->empty())
            r.add("policies", "must be a nonempty array of policy names");
        else
        {
            c.policies.clear();
            for (std::size_t i = 0; i < it->size(); ++i)
            {
                const json &v = (*it)[i];
                const auto p = v.is_string() ? parse_policy(v.get<std::string>()) : std::nullopt;
                if (!p)
                    r.add(fmt::format("policies[{}]", i), "must be NetworkCentric, UserCentric or AlwaysOn");
                else if (std::find(c.policies.begin(), c.policies.end(), *p) != c.policies.end())
                    r.add(fmt::format("policies[{}]", i), "duplicate policy");
                else
                    c.policies.push_back(*p);
            }
        }
    }

    if (const auto it = doc.find("hours"); it != doc.end())
    {
        if (!it->is_array() || it->empty())
            r.add("hours", "must be a nonempty array of hours in 0..23");
        else
        {
            std::set<int> hs;
            for (std::size_t i = 0; i < it->size(); ++i)
            {
                const json &v = (*it)[i];
                if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 23)
                    r.add(fmt::format("hours[{}]", i), "must be an integer in 0..23");
                else if (!hs.insert(v.get<int>()).second)
                    r.add(fmt::format("hours[{}]", i), "duplicate hour");
            }
            c.hours.assign(hs.begin(), hs.end());
        }
    }

    read_scenario(r, r.section(doc, "scenario"), c.scenario);
    read_traffic(r, r.section(doc, "traffic"), c.traffic);
    read_radio(r, r.section(doc, "radio"), c.radio, base_dir);
    read_power(r, r.section(doc, "power"), c.power);
    read_linklevel(r, r.section(doc, "linklevel"), c.linklevel);

    if (const json *m = r.section(doc, "mesh"))
    {
        r.known_keys(*m, "mesh", {"routing_cost"});
        std::string cost = "sectors_hops_distance";
        r.string(m, "mesh", "routing_cost", cost);
        if (cost == "sectors_hops_distance")
            c.mesh.routing_cost = RoutingCost::SectorsHopsDistance;
        else if (cost == "hops_distance")
            c.mesh.routing_cost = RoutingCost::HopsDistance;
        else
            r.add("mesh.routing_cost", "must be \"sectors_hops_distance\" or \"hops_distance\"");
    }

    // Placement feasibility is only known by trying it.
    if (out.diagnostics.empty())
    {
        try
        {
            (void)generate_scenario(c.scenario, c.seed);
        }
        catch (const ScenarioError &e)
        {
            r.add("scenario.n_scbs", e.what());
        }
    }

    if (out.diagnostics.empty())
        out.config = std::move(c);
    return out;
}

ConfigLoad parse_config_text(const std::string &text, const std::string &base_dir)
{
    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        ConfigLoad out;
        out.diagnostics.push_back({"", fmt::format("invalid JSON: {}", e.what())});
        return out;
    }
    return parse_config(doc, base_dir);
}

ConfigLoad load_config(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw ConfigFileError(fmt::format("cannot read configuration file '{}'", path));
    std::stringstream ss;
    ss << f.rdbuf();
    if (f.bad())
        throw ConfigFileError(fmt::format("cannot read configuration file '{}'", path));
    const auto base = std::filesystem::path(path).parent_path();
    return parse_config_text(ss.str(), base.empty() ? "." : base.string());
}

std::vector<Diagnostic> validate_config(const std::string &path)
{
    return load_config(path).diagnostics;
}

json to_json(const ExperimentConfig &c)
{
    json policies = json::array();
    for (Policy p : c.policies)
        policies.push_back(std::string(to_string(p)));
    json hotspots = json::array();
    for (const Hotspot &h : c.traffic.hotspots)
        hotspots.push_back({{"x", h.center.x}, {"y", h.center.y}, {"radius_m", h.radius_m}, {"weight", h.weight}});
    json mcs = json::array();
    for (const McsEntry &e : c.radio.mmw_mcs)
        mcs.push_back({e.snr_threshold_db, e.se_bps_hz});
    const RadioParams &rp = c.radio;
    const LinkLevelParams &lp = c.linklevel.params;
    return {
        {"seed", c.seed},
        {"threads", c.threads},
        {"policies", policies},
        {"hours", c.hours},
        {"scenario",
         {{"side_m", c.scenario.area.side_m},
          {"macro_isd_m", c.scenario.area.macro_isd_m},
          {"n_scbs", c.scenario.n_scbs},
          {"n_users", c.scenario.n_users},
          {"placement", c.scenario.placement == Placement::Grid ? "grid" : "uniform"},
          {"min_separation_m", c.scenario.min_separation_m},
          {"sectors_per_scbs", c.scenario.sectors_per_scbs},
          {"macro_height_m", c.scenario.macro_height_m},
          {"scbs_height_m", c.scenario.scbs_height_m},
          {"user_mean_demand_bps", c.scenario.user_mean_demand_bps}}},
        {"traffic",
         {{"scale_factor", c.traffic.scale_factor},
          {"peak_area_demand_bps", c.traffic.peak_area_demand_bps},
          {"jitter_sigma", c.traffic.jitter_sigma},
          {"hourly_multiplier", c.traffic.hourly_multiplier},
          {"hotspots", hotspots}}},
        {"radio",
         {{"lte_bandwidth_hz", rp.lte_bandwidth_hz},
          {"lte_carrier_hz", rp.lte_carrier_hz},
          {"lte_antenna_gain_dbi", rp.lte_antenna_gain_dbi},
          {"lte_tx_power_dbm", rp.lte_tx_power_dbm},
          {"lte_beamwidth_deg", rp.lte_beamwidth_deg},
          {"lte_front_to_back_db", rp.lte_front_to_back_db},
          {"lte_max_se_bps_hz", rp.lte_max_se_bps_hz},
          {"mmw_channel_bandwidth_hz", rp.mmw_channel_bandwidth_hz},
          {"mmw_n_channels", rp.mmw_n_channels},
          {"mmw_carrier_hz", rp.mmw_carrier_hz},
          {"mmw_antenna_gain_dbi", rp.mmw_antenna_gain_dbi},
          {"mmw_tx_power_dbm", rp.mmw_tx_power_dbm},
          {"mmw_beamwidth_deg", rp.mmw_beamwidth_deg},
          {"mmw_ref_distance_m", rp.mmw_ref_distance_m},
          {"mmw_path_loss_exponent", rp.mmw_path_loss_exponent},
          {"mmw_oxygen_db_per_km", rp.mmw_oxygen_db_per_km},
          {"mmw_mcs", mcs},
          {"noise_density_dbm_hz", rp.noise_density_dbm_hz},
          {"ue_antenna_gain_dbi", rp.ue_antenna_gain_dbi},
          {"ue_height_m", rp.ue_height_m}}},
        {"power", {{"p_on", c.power.p_on_w()}, {"p_off", c.power.p_off_w()}}},
        {"mesh",
         {{"routing_cost",
           c.mesh.routing_cost == RoutingCost::SectorsHopsDistance ? "sectors_hops_distance" : "hops_distance"}}},
        {"linklevel",
         {{"enabled", c.linklevel.enabled},
          {"k_factor_db", lp.k_factor_db},
          {"carrier_hz", lp.carrier_hz},
          {"code_rate", lp.code_rate},
          {"n_tx", lp.n_tx},
          {"n_rx", lp.n_rx},
          {"xpd_db", lp.xpd_db},
          {"cc_bandwidth_hz", lp.cc_bandwidth_hz},
          {"n_cc", lp.n_cc},
          {"max_bits_per_symbol", lp.max_bits_per_symbol},
          {"overhead_factor", lp.overhead_factor},
          {"snr_start_db", c.linklevel.snr_start_db},
          {"snr_stop_db", c.linklevel.snr_stop_db},
          {"snr_step_db", c.linklevel.snr_step_db},
          {"n_draws", c.linklevel.n_draws}}},
    };
}

} // namespace muran
