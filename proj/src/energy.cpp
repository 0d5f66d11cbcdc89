// SPDX-License-Identifier: Apache-2.0

#include "muran/energy.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace muran {

PowerModel::PowerModel(double p_on_w, double p_off_w) : p_on_(p_on_w), p_off_(p_off_w)
{
    if (!std::isfinite(p_on_w) || !std::isfinite(p_off_w) || !(p_off_w >= 0.0) || !(p_on_w > p_off_w))
        throw EnergyError("power model requires p_on > p_off >= 0");
}

PowerModel PowerModel::unchecked(double p_on_w, double p_off_w)
{
    PowerModel m;
    m.p_on_ = p_on_w;
    m.p_off_ = p_off_w;
    return m;
}

std::map<int, int> sector_counts(const Scenario &scenario)
{
    std::map<int, int> out;
    for (const Site &s : scenario.sites)
        if (s.kind == SiteKind::SCBS)
            out[s.id] = s.n_sectors;
    return out;
}

double config_power(const OnOffConfig &onoff, const std::map<int, int> &n_sectors, const PowerModel &model)
{
    const auto &status = onoff.sectors();
    if (status.size() != n_sectors.size())
        throw EnergyError(fmt::format("OnOffConfig covers {} SC-BSs, expected {}", status.size(), n_sectors.size()));
    // Integer counts first, so the sum is exact up to the final two products.
    long long n_on = 0;
    long long n_off = 0;
    for (const auto &[site, count] : n_sectors)
    {
        const auto it = status.find(site);
        if (it == status.end())
            throw EnergyError(fmt::format("OnOffConfig is missing SC-BS {}", site));
        if (static_cast<int>(it->second.size()) != count)
            throw EnergyError(fmt::format("SC-BS {} has {} sectors, OnOffConfig gives {}", site, count,
                                          it->second.size()));
        const auto on = std::count(it->second.begin(), it->second.end(), true);
        n_on += on;
        n_off += count - on;
    }
    return static_cast<double>(n_on) * model.p_on_w() + static_cast<double>(n_off) * model.p_off_w();
}

EnergyReport aggregate_energy(const std::map<Policy, std::vector<MeshState>> &states, const std::vector<int> &hours,
                              const std::map<int, int> &n_sectors, const PowerModel &model)
{
    if (states.empty())
        throw EnergyError("no policies to aggregate");
    if (hours.empty())
        throw EnergyError("no hours to aggregate");
    for (std::size_t i = 0; i < hours.size(); ++i)
    {
        if (hours[i] < 0 || hours[i] > 23)
            throw EnergyError(fmt::format("hour {} out of range", hours[i]));
        if (i > 0 && hours[i] <= hours[i - 1])
            throw EnergyError("hours must be strictly ascending");
    }

    EnergyReport r;
    r.model = model;
    r.hours = hours;
    r.total_sectors = std::accumulate(n_sectors.begin(), n_sectors.end(), 0,
                                      [](int acc, const auto &kv) { return acc + kv.second; });
    const double all_on_w = static_cast<double>(r.total_sectors) * model.p_on_w();
    const double all_on_wh = all_on_w * static_cast<double>(hours.size());

    for (const auto &[policy, per_hour] : states)
    {
        if (per_hour.size() != hours.size())
            throw EnergyError(fmt::format("policy {} has {} hourly states, expected {}", to_string(policy),
                                          per_hour.size(), hours.size()));
        double wh = 0.0;
        for (const MeshState &s : per_hour)
        {
            if (s.policy != policy)
                throw EnergyError(fmt::format("state filed under {} was produced by {}", to_string(policy),
                                              to_string(s.policy)));
            wh += config_power(s.onoff, n_sectors, model); // one hour per state
        }
        r.energy_wh[policy] = wh;
        r.reduction_vs_always_on[policy] = all_on_wh > 0.0 ? 1.0 - wh / all_on_wh : 0.0;
    }

    for (std::size_t i = 0; i < hours.size(); ++i)
        for (const auto &[policy, per_hour] : states)
        {
            const MeshState &s = per_hour[i];
            r.per_hour.push_back({hours[i], policy, s.onoff.on_count(), config_power(s.onoff, n_sectors, model),
                                  s.satisfied_fraction});
        }
    return r;
}

EnergyReport daily_energy(const std::map<Policy, std::vector<MeshState>> &states, const std::map<int, int> &n_sectors,
                          const PowerModel &model)
{
    for (const auto &[policy, per_hour] : states)
        if (per_hour.size() != 24)
            throw EnergyError(fmt::format("policy {} is missing hours ({} of 24 present)", to_string(policy),
                                          per_hour.size()));
    std::vector<int> hours(24);
    std::iota(hours.begin(), hours.end(), 0);
    return aggregate_energy(states, hours, n_sectors, model);
}

} // namespace muran
