// SPDX-License-Identifier: Apache-2.0

#include "flow_network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fmt/format.h>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace muran::detail {

namespace {

struct PathCost
{
    int sectors = 0;
    int hops = 0;
    double metres = 0.0;

    auto operator<=>(const PathCost &) const = default;
};

constexpr PathCost kInfinite{std::numeric_limits<int>::max(), 0, 0.0};

} // namespace

FlowNetwork::FlowNetwork(const Scenario &scenario, const RadioParams &radio, RoutingCost cost) : cost_(cost)
{
    const std::size_t n = scenario.sites.size();
    n_sectors_.resize(n);
    adj_.assign(n, {});
    traversable_.assign(n, false);
    traversable_[0] = true;
    demand_.assign(n, 0);
    remaining_.assign(n, 0);
    access_on_.resize(n);
    sector_on_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        n_sectors_[i] = scenario.sites[i].n_sectors;
        access_on_[i].assign(static_cast<std::size_t>(std::max(0, n_sectors_[i])), i == 0);
        sector_on_[i] = access_on_[i];
    }

    auto add_edge = [&](int u, int v, std::int64_t cap, double len) {
        const Site &su = scenario.sites[static_cast<std::size_t>(u)];
        const Site &sv = scenario.sites[static_cast<std::size_t>(v)];
        FlowEdge fwd;
        fwd.from = u;
        fwd.to = v;
        fwd.from_sector = sector_for_azimuth(azimuth_deg(su.position, sv.position), su.n_sectors);
        fwd.to_sector = sector_for_azimuth(azimuth_deg(sv.position, su.position), sv.n_sectors);
        fwd.capacity = cap;
        fwd.length_m = len;
        FlowEdge rev = fwd;
        std::swap(rev.from, rev.to);
        std::swap(rev.from_sector, rev.to_sector);
        rev.capacity = 0;
        rev.forward = false;
        const int idx = static_cast<int>(edges_.size());
        edges_.push_back(fwd);
        edges_.push_back(rev);
        adj_[static_cast<std::size_t>(u)].push_back(idx);
        adj_[static_cast<std::size_t>(v)].push_back(idx + 1);
    };

    // Downlink orientation: the gateway only sends, SC-BS pairs get both
    // directions. Candidate link iff the boresight MCS rate is nonzero.
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
        {
            const LinkBudget b = link_budget(scenario.sites[u], scenario.sites[v], radio, LinkKind::MmwLink);
            const auto cap = static_cast<std::int64_t>(std::floor(b.rate_bps));
            if (cap <= 0)
                continue;
            add_edge(static_cast<int>(u), static_cast<int>(v), cap, b.distance_m);
            if (u != 0)
                add_edge(static_cast<int>(v), static_cast<int>(u), cap, b.distance_m);
        }
}

void FlowNetwork::set_demand(int node, std::int64_t demand)
{
    if (node <= 0 || node >= n_nodes())
        throw std::out_of_range(fmt::format("no SC-BS node {}", node));
    if (demand < 0)
        throw std::invalid_argument("demand must be nonnegative");
    const auto i = static_cast<std::size_t>(node);
    remaining_[i] += demand - demand_[i];
    demand_[i] = demand;
}

std::int64_t FlowNetwork::total_remaining() const
{
    std::int64_t s = 0;
    for (std::int64_t r : remaining_)
        s += r;
    return s;
}

void FlowNetwork::load_sectors(const OnOffConfig &onoff)
{
    for (const auto &[site, status] : onoff.sectors())
    {
        if (site <= 0 || site >= n_nodes())
            throw std::out_of_range(fmt::format("OnOffConfig names unknown site {}", site));
        auto &dst = access_on_[static_cast<std::size_t>(site)];
        if (status.size() != dst.size())
            throw std::invalid_argument(fmt::format("site {} has {} sectors, OnOffConfig gives {}", site,
                                                    dst.size(), status.size()));
        for (std::size_t k = 0; k < dst.size(); ++k)
            dst[k] = status[k];
    }
    sector_on_ = access_on_;
}

bool FlowNetwork::sector_on(int node, int sector) const
{
    return node == gateway() || sector_on_[static_cast<std::size_t>(node)][static_cast<std::size_t>(sector)];
}

int FlowNetwork::sectors_on() const
{
    int count = 0;
    for (std::size_t i = 1; i < sector_on_.size(); ++i)
        count += static_cast<int>(std::count(sector_on_[i].begin(), sector_on_[i].end(), true));
    return count;
}

void FlowNetwork::load_flows(const std::vector<BackhaulLink> &links)
{
    std::map<std::pair<int, int>, int> index;
    for (std::size_t e = 0; e < edges_.size(); e += 2)
        index[{edges_[e].from, edges_[e].to}] = static_cast<int>(e);
    for (const BackhaulLink &l : links)
    {
        const auto it = index.find({l.from, l.to});
        if (it == index.end())
            throw std::invalid_argument(fmt::format("link {}->{} is not a candidate link", l.from, l.to));
        FlowEdge &e = edges_[static_cast<std::size_t>(it->second)];
        if (l.flow_bps < 0 || l.flow_bps > e.capacity)
            throw std::invalid_argument(fmt::format("link {}->{} flow exceeds capacity", l.from, l.to));
        e.flow = l.flow_bps;
    }
    remaining_ = demand_;
    for (std::size_t e = 0; e < edges_.size(); e += 2)
    {
        const FlowEdge &f = edges_[e];
        remaining_[static_cast<std::size_t>(f.to)] -= f.flow;
        if (f.from != gateway())
            remaining_[static_cast<std::size_t>(f.from)] += f.flow;
    }
}

std::int64_t FlowNetwork::residual(int e) const
{
    const FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
    return edge.forward ? edge.capacity - edge.flow : edges_[static_cast<std::size_t>(e ^ 1)].flow;
}

void FlowNetwork::push(int e, std::int64_t amount)
{
    FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
    if (edge.forward)
        edge.flow += amount;
    else
        edges_[static_cast<std::size_t>(e ^ 1)].flow -= amount;
}

void FlowNetwork::mark_sectors(int e)
{
    const FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
    if (edge.from != gateway())
        sector_on_[static_cast<std::size_t>(edge.from)][static_cast<std::size_t>(edge.from_sector)] = true;
    if (edge.to != gateway())
        sector_on_[static_cast<std::size_t>(edge.to)][static_cast<std::size_t>(edge.to_sector)] = true;
}

bool FlowNetwork::route_cheapest(int target)
{
    const auto n = static_cast<std::size_t>(n_nodes());
    std::vector<PathCost> best(n, kInfinite);
    std::vector<int> via(n, -1);
    using Item = std::tuple<PathCost, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    best[0] = {};
    queue.push({best[0], gateway()});
    while (!queue.empty())
    {
        const auto [cost, u] = queue.top();
        queue.pop();
        if (cost != best[static_cast<std::size_t>(u)])
            continue;
        if (u == target)
            break;
        for (int e : adj_[static_cast<std::size_t>(u)])
        {
            const FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
            if (!edge.forward || residual(e) <= 0 || !traversable(edge.to))
                continue;
            PathCost next = cost;
            if (cost_ == RoutingCost::SectorsHopsDistance)
                next.sectors += (sector_on(edge.from, edge.from_sector) ? 0 : 1) +
                                (sector_on(edge.to, edge.to_sector) ? 0 : 1);
            next.hops += 1;
            next.metres += edge.length_m;
            auto &slot = best[static_cast<std::size_t>(edge.to)];
            if (next < slot)
            {
                slot = next;
                via[static_cast<std::size_t>(edge.to)] = e;
                queue.push({next, edge.to});
            }
        }
    }
    if (via[static_cast<std::size_t>(target)] < 0)
        return false;

    std::vector<int> path;
    std::int64_t bottleneck = remaining_[static_cast<std::size_t>(target)];
    for (int v = target; v != gateway();)
    {
        const int e = via[static_cast<std::size_t>(v)];
        path.push_back(e);
        bottleneck = std::min(bottleneck, residual(e));
        v = edges_[static_cast<std::size_t>(e)].from;
    }
    for (int e : path)
    {
        push(e, bottleneck);
        mark_sectors(e);
    }
    remaining_[static_cast<std::size_t>(target)] -= bottleneck;
    return bottleneck > 0;
}

bool FlowNetwork::augment_any()
{
    const auto n = static_cast<std::size_t>(n_nodes());
    std::vector<int> via(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{gateway()};
    seen[0] = true;
    int sink = -1;
    while (!queue.empty() && sink < 0)
    {
        const int u = queue.front();
        queue.pop_front();
        for (int e : adj_[static_cast<std::size_t>(u)])
        {
            const FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
            const auto v = static_cast<std::size_t>(edge.to);
            if (seen[v] || !traversable(edge.to) || residual(e) <= 0)
                continue;
            seen[v] = true;
            via[v] = e;
            if (remaining_[v] > 0)
            {
                sink = edge.to;
                break;
            }
            queue.push_back(edge.to);
        }
    }
    if (sink < 0)
        return false;
    std::int64_t bottleneck = remaining_[static_cast<std::size_t>(sink)];
    for (int v = sink; v != gateway();)
    {
        const int e = via[static_cast<std::size_t>(v)];
        bottleneck = std::min(bottleneck, residual(e));
        v = edges_[static_cast<std::size_t>(e)].from;
    }
    for (int v = sink; v != gateway();)
    {
        const int e = via[static_cast<std::size_t>(v)];
        push(e, bottleneck);
        v = edges_[static_cast<std::size_t>(e)].from;
    }
    remaining_[static_cast<std::size_t>(sink)] -= bottleneck;
    return true;
}

void FlowNetwork::route_all()
{
    std::vector<int> order;
    for (int v = 1; v < n_nodes(); ++v)
        if (remaining(v) > 0 && traversable(v))
            order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return remaining(a) > remaining(b); });
    for (int v : order)
        while (remaining(v) > 0 && route_cheapest(v))
        {
        }
    while (total_remaining() > 0 && augment_any())
    {
    }
    finalize();
}

std::optional<std::vector<int>> FlowNetwork::cheapest_reactivation(int target) const
{
    using Cost = std::pair<int, int>; // (sleeping nodes entered, hops)
    const auto n = static_cast<std::size_t>(n_nodes());
    const Cost inf{std::numeric_limits<int>::max(), 0};
    std::vector<Cost> best(n, inf);
    std::vector<int> via(n, -1);
    using Item = std::tuple<Cost, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    best[0] = {0, 0};
    queue.push({best[0], gateway()});
    while (!queue.empty())
    {
        const auto [cost, u] = queue.top();
        queue.pop();
        if (cost != best[static_cast<std::size_t>(u)])
            continue;
        if (u == target)
            break;
        for (int e : adj_[static_cast<std::size_t>(u)])
        {
            const FlowEdge &edge = edges_[static_cast<std::size_t>(e)];
            if (edge.to == gateway() || residual(e) <= 0)
                continue;
            const Cost next{cost.first + (traversable(edge.to) ? 0 : 1), cost.second + 1};
            auto &slot = best[static_cast<std::size_t>(edge.to)];
            if (next < slot)
            {
                slot = next;
                via[static_cast<std::size_t>(edge.to)] = e;
                queue.push({next, edge.to});
            }
        }
    }
    if (via[static_cast<std::size_t>(target)] < 0)
        return std::nullopt;
    std::vector<int> sleeping;
    for (int v = target; v != gateway(); v = edges_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)])].from)
        if (!traversable(v))
            sleeping.push_back(v);
    std::sort(sleeping.begin(), sleeping.end());
    return sleeping;
}

void FlowNetwork::finalize()
{
    std::map<std::pair<int, int>, int> index;
    for (std::size_t e = 0; e < edges_.size(); e += 2)
        index[{edges_[e].from, edges_[e].to}] = static_cast<int>(e);
    for (std::size_t e = 0; e < edges_.size(); e += 2)
    {
        FlowEdge &a = edges_[e];
        if (a.flow <= 0 || a.from > a.to || a.from == gateway())
            continue;
        const auto it = index.find({a.to, a.from});
        if (it == index.end())
            continue;
        FlowEdge &b = edges_[static_cast<std::size_t>(it->second)];
        const std::int64_t m = std::min(a.flow, b.flow);
        a.flow -= m;
        b.flow -= m;
    }
    sector_on_ = access_on_;
    for (std::size_t e = 0; e < edges_.size(); e += 2)
        if (edges_[e].flow > 0)
            mark_sectors(static_cast<int>(e));
}

std::vector<BackhaulLink> FlowNetwork::positive_links() const
{
    std::vector<BackhaulLink> out;
    for (std::size_t e = 0; e < edges_.size(); e += 2)
    {
        const FlowEdge &f = edges_[e];
        if (f.flow > 0)
            out.push_back({f.from, f.to, f.from_sector, f.to_sector, f.capacity, f.flow, f.length_m});
    }
    std::sort(out.begin(), out.end(),
              [](const BackhaulLink &a, const BackhaulLink &b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return out;
}

} // namespace muran::detail
