// SPDX-License-Identifier: Apache-2.0
//
// Spatio-temporal traffic demand: a 24-hour multiplier curve times a spatial
// density made of Gaussian hotspots over a uniform background, calibrated so
// the expected area total at the peak hour equals scale * peak_area_demand.

#ifndef MURAN_TRAFFIC_HPP
#define MURAN_TRAFFIC_HPP

#include "muran/geometry.hpp"
#include "muran/scenario.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace muran {

struct Hotspot
{
    Vec2 center;
    double radius_m = 50.0; // standard deviation of the radial Gaussian
    double weight = 0.0;    // share of area traffic carried by this cluster
};

struct TrafficProfile
{
    std::array<double, 24> hourly_multiplier{};
    std::vector<Hotspot> hotspots;
    double scale_factor = 1000.0;
    // Measured area total at the peak hour before scaling.
    double peak_area_demand_bps = 44.0e6;
    // Log-normal per-user jitter (sigma of the underlying normal, mean 1).
    double jitter_sigma = 0.5;

    double background_weight() const;
    // Traffic density in 1/m^2 at p (integrates to ~1 over the area).
    double spatial_density(Vec2 p, const Area &area) const;
    void validate() const;
};

struct TrafficSnapshot
{
    int hour = 0;
    std::vector<double> demands_bps; // indexed by user id

    double total_bps() const;
};

// Built-in diurnal curve: raised cosine with trough 0.05 at 03:00 and crest
// 1.0 at 15:00, plus three default hotspots (80% of traffic) around the
// evaluation cell of a default Area.
TrafficProfile diurnal_default();

// Per-user demand = mean_demand * hourly_multiplier[hour] * spatial weight
// * jitter * scale_factor.
TrafficSnapshot sample_traffic(const Scenario &scenario, const TrafficProfile &profile, int hour,
                               std::uint64_t seed);

} // namespace muran

#endif
