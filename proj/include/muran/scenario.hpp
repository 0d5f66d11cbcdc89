// SPDX-License-Identifier: Apache-2.0
//
// Simulated world: a square area tiled by macro cells, with one evaluation
// cell whose macro BS doubles as the mmWave gateway and is overlaid by a
// mesh of small-cell base stations (SC-BSs).

#ifndef MURAN_SCENARIO_HPP
#define MURAN_SCENARIO_HPP

#include "muran/geometry.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace muran {

class ScenarioError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

struct Area
{
    double side_m = 2000.0;
    double macro_isd_m = 500.0;

    Vec2 center() const { return {0.5 * side_m, 0.5 * side_m}; }
    Hexagon evaluation_cell() const { return {center(), 0.5 * macro_isd_m}; }
    bool contains(Vec2 p) const;
    void validate() const;
};

enum class SiteKind
{
    MacroBS,
    SCBS
};

struct Site
{
    int id = 0;
    SiteKind kind = SiteKind::SCBS;
    Vec2 position;
    double height_m = 0.0;
    int n_sectors = 0;
    bool is_gateway = false;
};

struct User
{
    int id = 0;
    Vec2 position;
    double mean_demand_bps = 0.0;
};

enum class Placement
{
    UniformRandom,
    Grid
};

struct ScenarioConfig
{
    Area area;
    int n_scbs = 90;
    int n_users = 8000;
    Placement placement = Placement::UniformRandom;
    double min_separation_m = 20.0;
    int sectors_per_scbs = 3;
    double macro_height_m = 25.0;
    double scbs_height_m = 4.0;
    double user_mean_demand_bps = 62.0e3;
    // Rejection-sampling budget per SC-BS for UniformRandom placement.
    int placement_attempts = 10000;

    void validate() const;
};

// Immutable once generated. sites[0] is the macro BS / gateway (id 0);
// SC-BSs follow with ids 1..n_scbs. Users carry ids 0..n_users-1.
struct Scenario
{
    Area area;
    std::vector<Site> sites;
    std::vector<User> users;

    const Site &gateway() const { return sites.front(); }
    const Site &site(int id) const;
    std::size_t n_scbs() const { return sites.empty() ? 0 : sites.size() - 1; }
    bool in_evaluation_cell(Vec2 p) const { return area.evaluation_cell().contains(p); }

    // Checks the structural invariants (one gateway macro first, unique ids,
    // SC-BS sector counts in {3, 4}, every position inside the area).
    void validate() const;
};

Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed);

} // namespace muran

#endif
