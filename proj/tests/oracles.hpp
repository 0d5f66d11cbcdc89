// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations used only by the tests. They share nothing with
// the library's routing code beyond the public link budget.

#ifndef MURAN_TEST_ORACLES_HPP
#define MURAN_TEST_ORACLES_HPP

#include "muran/mesh_manager.hpp"
#include "muran/radio.hpp"
#include "muran/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Plain Edmonds-Karp on an adjacency matrix.
inline std::int64_t max_flow(Matrix cap, int s, int t)
{
    const int n = static_cast<int>(cap.size());
    std::int64_t total = 0;
    for (;;)
    {
        std::vector<int> parent(static_cast<std::size_t>(n), -1);
        parent[static_cast<std::size_t>(s)] = s;
        std::queue<int> q;
        q.push(s);
        while (!q.empty() && parent[static_cast<std::size_t>(t)] < 0)
        {
            const int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if (parent[static_cast<std::size_t>(v)] < 0 && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0)
                {
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                }
        }
        if (parent[static_cast<std::size_t>(t)] < 0)
            return total;
        std::int64_t push = std::numeric_limits<std::int64_t>::max();
        for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)])
            push = std::min(push, cap[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])][static_cast<std::size_t>(v)]);
        for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)])
        {
            const auto u = static_cast<std::size_t>(parent[static_cast<std::size_t>(v)]);
            cap[u][static_cast<std::size_t>(v)] -= push;
            cap[static_cast<std::size_t>(v)][u] += push;
        }
        total += push;
    }
}

// Backhaul capacity between two sites, or 0 when no MCS is decodable.
inline std::int64_t link_capacity(const muran::Scenario &sc, int a, int b, const muran::RadioParams &radio)
{
    const auto b_ = muran::link_budget(sc.site(a), sc.site(b), radio, muran::LinkKind::MmwLink);
    return static_cast<std::int64_t>(std::floor(b_.rate_bps));
}

// Max flow from the gateway to the SC-BSs in `demand`, each capped at its
// demand, using only gateway and `allowed` sites as endpoints or relays.
inline std::int64_t deliverable(const muran::Scenario &sc, const muran::RadioParams &radio,
                                const std::set<int> &allowed, const std::map<int, std::int64_t> &demand)
{
    const int n = static_cast<int>(sc.sites.size());
    const int sink = n;
    Matrix cap(static_cast<std::size_t>(n + 1), std::vector<std::int64_t>(static_cast<std::size_t>(n + 1), 0));
    auto usable = [&](int v) { return v == 0 || allowed.count(v) > 0; };
    for (int u = 0; u < n; ++u)
        for (int v = 1; v < n; ++v)
            if (u != v && usable(u) && usable(v))
                cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = std::max<std::int64_t>(0, link_capacity(sc, u, v, radio));
    for (const auto &[site, d] : demand)
        if (usable(site))
            cap[static_cast<std::size_t>(site)][static_cast<std::size_t>(sink)] = d;
    return max_flow(std::move(cap), 0, sink);
}

inline std::int64_t total(const std::map<int, std::int64_t> &demand)
{
    std::int64_t t = 0;
    for (const auto &kv : demand)
        t += kv.second;
    return t;
}

// Smallest number of extra sites whose wake-up lets every demand reach the
// gateway, by enumeration in order of subset size. nullopt if even waking
// every candidate is not enough.
inline std::optional<int> min_reactivation(const muran::Scenario &sc, const muran::RadioParams &radio,
                                           const std::set<int> &active, const std::map<int, std::int64_t> &demand)
{
    std::vector<int> sleeping;
    for (int v = 1; v < static_cast<int>(sc.sites.size()); ++v)
        if (!active.count(v))
            sleeping.push_back(v);
    const std::int64_t need = total(demand);
    const int m = static_cast<int>(sleeping.size());
    std::vector<std::vector<unsigned>> by_size(static_cast<std::size_t>(m + 1));
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    for (int k = 0; k <= m; ++k)
        for (unsigned mask : by_size[static_cast<std::size_t>(k)])
        {
            std::set<int> allowed = active;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i))
                    allowed.insert(sleeping[static_cast<std::size_t>(i)]);
            if (deliverable(sc, radio, allowed, demand) == need)
                return k;
        }
    return std::nullopt;
}

// Exact flow checks on a graph: capacity, conservation against the routed
// amount, and that links only join sites with an On sector at each end.
struct FlowAudit
{
    bool capacity_ok = true;
    bool conservation_ok = true;
    bool endpoints_on = true;
    bool capacities_match = true;
};

inline FlowAudit audit(const muran::Scenario &sc, const muran::RadioParams &radio, const muran::MeshState &st)
{
    FlowAudit a;
    std::map<int, std::int64_t> net;
    for (const muran::BackhaulLink &l : st.graph.links)
    {
        if (l.flow_bps <= 0 || l.flow_bps > l.capacity_bps)
            a.capacity_ok = false;
        if (l.capacity_bps != link_capacity(sc, l.from, l.to, radio))
            a.capacities_match = false;
        net[l.to] += l.flow_bps;
        net[l.from] -= l.flow_bps;
        if (l.from != 0 && !st.onoff.is_on(l.from, l.from_sector))
            a.endpoints_on = false;
        if (l.to != 0 && !st.onoff.is_on(l.to, l.to_sector))
            a.endpoints_on = false;
    }
    for (const auto &[site, inflow] : net)
    {
        if (site == 0)
            continue;
        const auto it = st.graph.routed_bps.find(site);
        const std::int64_t routed = it == st.graph.routed_bps.end() ? 0 : it->second;
        if (inflow != routed)
            a.conservation_ok = false;
    }
    for (const auto &[site, routed] : st.graph.routed_bps)
        if (routed != 0 && net[site] != routed)
            a.conservation_ok = false;
    return a;
}

// Gateway-reachability over flow-positive links.
inline std::set<int> reachable_by_flow(const muran::BackhaulGraph &g)
{
    std::set<int> seen{g.gateway};
    bool grew = true;
    while (grew)
    {
        grew = false;
        for (const muran::BackhaulLink &l : g.links)
            if (l.flow_bps > 0 && seen.count(l.from) && !seen.count(l.to))
            {
                seen.insert(l.to);
                grew = true;
            }
    }
    return seen;
}

} // namespace oracle

#endif
