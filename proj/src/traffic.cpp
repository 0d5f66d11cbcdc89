// SPDX-License-Identifier: Apache-2.0

#include "muran/traffic.hpp"

#include "muran/rng.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace muran {

double TrafficProfile::background_weight() const
{
    double hot = 0.0;
    for (const Hotspot &h : hotspots)
        hot += h.weight;
    return std::max(0.0, 1.0 - hot);
}

double TrafficProfile::spatial_density(Vec2 p, const Area &area) const
{
    double rho = background_weight() / (area.side_m * area.side_m);
    for (const Hotspot &h : hotspots)
    {
        const double var = h.radius_m * h.radius_m;
        const double dx = p.x - h.center.x;
        const double dy = p.y - h.center.y;
        rho += h.weight * std::exp(-(dx * dx + dy * dy) / (2.0 * var)) / (2.0 * std::numbers::pi * var);
    }
    return rho;
}

void TrafficProfile::validate() const
{
    double peak = 0.0;
    for (double m : hourly_multiplier)
    {
        if (!(m >= 0.0 && m <= 1.0))
            throw std::invalid_argument("hourly multipliers must lie in [0, 1]");
        peak = std::max(peak, m);
    }
    if (peak != 1.0)
        throw std::invalid_argument("hourly multipliers must be normalized to a maximum of 1");
    double hot = 0.0;
    for (const Hotspot &h : hotspots)
    {
        if (!(h.radius_m > 0.0) || !std::isfinite(h.radius_m))
            throw std::invalid_argument("hotspot radius must be positive");
        if (!(h.weight >= 0.0))
            throw std::invalid_argument("hotspot weight must be nonnegative");
        hot += h.weight;
    }
    if (hot > 1.0 + 1e-12)
        throw std::invalid_argument("hotspot weights must sum to at most 1");
    if (!(scale_factor >= 0.0) || !std::isfinite(scale_factor))
        throw std::invalid_argument("scale factor must be nonnegative");
    if (!(peak_area_demand_bps >= 0.0) || !std::isfinite(peak_area_demand_bps))
        throw std::invalid_argument("peak area demand must be nonnegative");
    if (!(jitter_sigma >= 0.0) || !std::isfinite(jitter_sigma))
        throw std::invalid_argument("jitter sigma must be nonnegative");
}

double TrafficSnapshot::total_bps() const
{
    return std::accumulate(demands_bps.begin(), demands_bps.end(), 0.0);
}

TrafficProfile diurnal_default()
{
    TrafficProfile p;
    for (int h = 0; h < 24; ++h)
        p.hourly_multiplier[static_cast<std::size_t>(h)] =
            0.525 - 0.475 * std::cos(2.0 * std::numbers::pi * (h - 3) / 24.0);
    p.hourly_multiplier[3] = 0.05;
    p.hourly_multiplier[15] = 1.0;

    // Default Area: 2000 m square, evaluation cell centred at (1000, 1000).
    p.hotspots = {
        {{880.0, 1110.0}, 20.0, 0.06}, // upper-left of the evaluation cell
        {{1130.0, 880.0}, 20.0, 0.03}, // lower-right of the evaluation cell
        {{450.0, 1450.0}, 150.0, 0.71}, // station area in a neighbouring cell
    };
    return p;
}

TrafficSnapshot sample_traffic(const Scenario &scenario, const TrafficProfile &profile, int hour,
                               std::uint64_t seed)
{
    if (hour < 0 || hour > 23)
        throw std::out_of_range("hour must be in 0..23");
    profile.validate();

    const std::size_t n = scenario.users.size();
    std::vector<double> rho(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        rho[i] = profile.spatial_density(scenario.users[i].position, scenario.area);
        norm += scenario.users[i].mean_demand_bps * rho[i];
    }

    TrafficSnapshot snap;
    snap.hour = hour;
    snap.demands_bps.assign(n, 0.0);
    const double mult = profile.hourly_multiplier[static_cast<std::size_t>(hour)];
    const double sigma = profile.jitter_sigma;

    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
    {
        // One normal per user regardless of branch keeps the stream aligned.
        const double z = rng.normal();
        if (norm <= 0.0)
            continue;
        const double weight = profile.peak_area_demand_bps * rho[i] / norm;
        const double jitter = std::exp(sigma * z - 0.5 * sigma * sigma);
        snap.demands_bps[i] = scenario.users[i].mean_demand_bps * mult * weight * jitter * profile.scale_factor;
    }
    return snap;
}

} // namespace muran
