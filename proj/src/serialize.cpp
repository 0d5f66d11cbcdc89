// SPDX-License-Identifier: Apache-2.0

#include "muran/serialize.hpp"

namespace muran {

using nlohmann::json;

json to_json(const Scenario &scenario)
{
    json sites = json::array();
    for (const Site &s : scenario.sites)
        sites.push_back({{"id", s.id},
                         {"kind", s.kind == SiteKind::MacroBS ? "MacroBS" : "SCBS"},
                         {"x", s.position.x},
                         {"y", s.position.y},
                         {"height_m", s.height_m},
                         {"n_sectors", s.n_sectors},
                         {"is_gateway", s.is_gateway}});
    json users = json::array();
    for (const User &u : scenario.users)
        users.push_back({{"id", u.id}, {"x", u.position.x}, {"y", u.position.y}, {"mean_demand_bps", u.mean_demand_bps}});
    return {{"area", {{"side_m", scenario.area.side_m}, {"macro_isd_m", scenario.area.macro_isd_m}}},
            {"sites", std::move(sites)},
            {"users", std::move(users)}};
}

json to_json(const TrafficSnapshot &snapshot)
{
    return {{"hour", snapshot.hour}, {"demands_bps", snapshot.demands_bps}};
}

json to_json(const MeshState &state, const Scenario &scenario, int hour)
{
    json nodes = json::array();
    for (const Site &s : scenario.sites)
    {
        json n = {{"id", s.id}, {"x", s.position.x}, {"y", s.position.y}, {"gateway", s.is_gateway}};
        if (s.kind == SiteKind::SCBS)
        {
            const auto &st = state.onoff.sectors().at(s.id);
            n["sectors_on"] = std::vector<bool>(st.begin(), st.end());
            const auto d = state.graph.demand_bps.find(s.id);
            n["demand_bps"] = d == state.graph.demand_bps.end() ? 0 : d->second;
            const auto r = state.graph.routed_bps.find(s.id);
            n["routed_bps"] = r == state.graph.routed_bps.end() ? 0 : r->second;
        }
        nodes.push_back(std::move(n));
    }
    json links = json::array();
    for (const BackhaulLink &l : state.graph.links)
        links.push_back({{"from", l.from},
                         {"to", l.to},
                         {"from_sector", l.from_sector},
                         {"to_sector", l.to_sector},
                         {"capacity_bps", l.capacity_bps},
                         {"flow_bps", l.flow_bps}});
    return {{"hour", hour},
            {"policy", std::string(to_string(state.policy))},
            {"active_scbs", state.active_scbs()},
            {"active_sectors", state.onoff.on_count()},
            {"offered_bps", state.offered_bps},
            {"served_bps", state.served_bps},
            {"satisfied_fraction", state.satisfied_fraction},
            {"lte_users", state.assignment.lte_users()},
            {"nodes", std::move(nodes)},
            {"links", std::move(links)},
            {"isolated", state.graph.isolated},
            {"relays", state.graph.relays}};
}

} // namespace muran
