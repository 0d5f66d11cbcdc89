// SPDX-License-Identifier: Apache-2.0

#include "muran/scenario.hpp"

#include "muran/rng.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace muran {

bool Area::contains(Vec2 p) const
{
    return p.x >= 0.0 && p.y >= 0.0 && p.x <= side_m && p.y <= side_m;
}

void Area::validate() const
{
    if (!(side_m > 0.0) || !std::isfinite(side_m))
        throw ScenarioError("area side must be positive");
    if (!(macro_isd_m > 0.0) || !std::isfinite(macro_isd_m))
        throw ScenarioError("macro inter-site distance must be positive");
    if (evaluation_cell().circumradius() > 0.5 * side_m)
        throw ScenarioError("evaluation cell does not fit inside the area");
}

void ScenarioConfig::validate() const
{
    area.validate();
    if (n_scbs < 0)
        throw ScenarioError("SC-BS count must be nonnegative");
    if (n_users < 0)
        throw ScenarioError("user count must be nonnegative");
    if (!(min_separation_m >= 0.0))
        throw ScenarioError("minimum separation must be nonnegative");
    if (sectors_per_scbs != 3 && sectors_per_scbs != 4)
        throw ScenarioError("SC-BS sector count must be 3 or 4");
    if (!(macro_height_m > 0.0) || !(scbs_height_m > 0.0))
        throw ScenarioError("antenna heights must be positive");
    if (!(user_mean_demand_bps >= 0.0) || !std::isfinite(user_mean_demand_bps))
        throw ScenarioError("user mean demand must be nonnegative");
    if (placement_attempts < 1)
        throw ScenarioError("placement attempts must be positive");
}

const Site &Scenario::site(int id) const
{
    if (id < 0 || static_cast<std::size_t>(id) >= sites.size() || sites[id].id != id)
        throw ScenarioError(fmt::format("unknown site id {}", id));
    return sites[static_cast<std::size_t>(id)];
}

void Scenario::validate() const
{
    area.validate();
    if (sites.empty())
        throw ScenarioError("scenario has no macro BS");
    const Site &gw = sites.front();
    if (gw.kind != SiteKind::MacroBS || !gw.is_gateway || gw.id != 0)
        throw ScenarioError("first site must be the gateway macro BS with id 0");
    for (std::size_t i = 0; i < sites.size(); ++i)
    {
        const Site &s = sites[i];
        if (s.id != static_cast<int>(i))
            throw ScenarioError(fmt::format("site at index {} has id {}", i, s.id));
        if (i > 0 && (s.kind != SiteKind::SCBS || s.is_gateway))
            throw ScenarioError(fmt::format("site {} must be a non-gateway SC-BS", s.id));
        if (s.kind == SiteKind::SCBS && s.n_sectors != 3 && s.n_sectors != 4)
            throw ScenarioError(fmt::format("SC-BS {} has {} sectors", s.id, s.n_sectors));
        if (!area.contains(s.position))
            throw ScenarioError(fmt::format("site {} lies outside the area", s.id));
        for (std::size_t j = 0; j < i; ++j)
            if (sites[j].position == s.position)
                throw ScenarioError(fmt::format("sites {} and {} are co-located", sites[j].id, s.id));
    }
    for (std::size_t i = 0; i < users.size(); ++i)
    {
        const User &u = users[i];
        if (u.id != static_cast<int>(i))
            throw ScenarioError(fmt::format("user at index {} has id {}", i, u.id));
        if (!area.contains(u.position))
            throw ScenarioError(fmt::format("user {} lies outside the area", u.id));
        if (!(u.mean_demand_bps >= 0.0))
            throw ScenarioError(fmt::format("user {} has negative mean demand", u.id));
    }
}

namespace {

bool far_enough(const std::vector<Site> &placed, Vec2 p, double min_sep)
{
    return std::all_of(placed.begin(), placed.end(),
                       [&](const Site &s) { return distance(s.position, p) >= min_sep && !(s.position == p); });
}

std::vector<Vec2> uniform_positions(const ScenarioConfig &cfg, const Site &gateway, Rng &rng)
{
    const Hexagon cell = cfg.area.evaluation_cell();
    const double r = cell.circumradius();
    std::vector<Site> placed{gateway};
    std::vector<Vec2> out;
    out.reserve(static_cast<std::size_t>(cfg.n_scbs));
    for (int k = 0; k < cfg.n_scbs; ++k)
    {
        bool ok = false;
        for (int attempt = 0; attempt < cfg.placement_attempts && !ok; ++attempt)
        {
            const Vec2 p{cell.center.x + rng.uniform(-r, r), cell.center.y + rng.uniform(-r, r)};
            if (!cell.contains(p) || !far_enough(placed, p, cfg.min_separation_m))
                continue;
            placed.push_back(Site{.position = p});
            out.push_back(p);
            ok = true;
        }
        if (!ok)
            throw ScenarioError(fmt::format("cannot place SC-BS {} of {} with {} m minimum separation", k + 1,
                                            cfg.n_scbs, cfg.min_separation_m));
    }
    return out;
}

// Square lattice centred on the gateway; the n points closest to the centre
// (excluding the gateway itself) are kept.
std::vector<Vec2> grid_positions(const ScenarioConfig &cfg)
{
    const Hexagon cell = cfg.area.evaluation_cell();
    if (cfg.n_scbs == 0)
        return {};
    const double cell_area = 2.0 * std::sqrt(3.0) * cell.apothem_m * cell.apothem_m;
    double spacing = std::sqrt(cell_area / (cfg.n_scbs + 1));
    for (int shrink = 0; shrink < 64; ++shrink, spacing *= 0.95)
    {
        if (spacing < cfg.min_separation_m)
            break;
        std::vector<Vec2> pts;
        const int m = static_cast<int>(std::ceil(cell.circumradius() / spacing)) + 1;
        for (int i = -m; i <= m; ++i)
            for (int j = -m; j <= m; ++j)
            {
                if (i == 0 && j == 0)
                    continue;
                const Vec2 p{cell.center.x + i * spacing, cell.center.y + j * spacing};
                if (cell.contains(p))
                    pts.push_back(p);
            }
        if (static_cast<int>(pts.size()) < cfg.n_scbs)
            continue;
        std::stable_sort(pts.begin(), pts.end(), [&](Vec2 a, Vec2 b) {
            const double da = distance(a, cell.center);
            const double db = distance(b, cell.center);
            if (da != db)
                return da < db;
            return a.y != b.y ? a.y < b.y : a.x < b.x;
        });
        pts.resize(static_cast<std::size_t>(cfg.n_scbs));
        return pts;
    }
    throw ScenarioError(fmt::format("cannot place {} SC-BSs on a grid with {} m minimum separation", cfg.n_scbs,
                                    cfg.min_separation_m));
}

} // namespace

Scenario generate_scenario(const ScenarioConfig &config, std::uint64_t seed)
{
    config.validate();
    Scenario sc;
    sc.area = config.area;

    Site gw;
    gw.id = 0;
    gw.kind = SiteKind::MacroBS;
    gw.position = config.area.center();
    gw.height_m = config.macro_height_m;
    gw.n_sectors = 3;
    gw.is_gateway = true;
    sc.sites.push_back(gw);

    Rng site_rng(derive_seed(seed, kAnySlot, kAnySlot, "scenario.sites"));
    const std::vector<Vec2> positions = config.placement == Placement::Grid
                                            ? grid_positions(config)
                                            : uniform_positions(config, gw, site_rng);
    for (std::size_t i = 0; i < positions.size(); ++i)
    {
        Site s;
        s.id = static_cast<int>(i) + 1;
        s.kind = SiteKind::SCBS;
        s.position = positions[i];
        s.height_m = config.scbs_height_m;
        s.n_sectors = config.sectors_per_scbs;
        sc.sites.push_back(s);
    }

    Rng user_rng(derive_seed(seed, kAnySlot, kAnySlot, "scenario.users"));
    sc.users.reserve(static_cast<std::size_t>(config.n_users));
    for (int i = 0; i < config.n_users; ++i)
    {
        User u;
        u.id = i;
        u.position = {user_rng.uniform(0.0, config.area.side_m), user_rng.uniform(0.0, config.area.side_m)};
        u.mean_demand_bps = config.user_mean_demand_bps;
        sc.users.push_back(u);
    }
    return sc;
}

} // namespace muran
