// SPDX-License-Identifier: Apache-2.0

#include "muran/mesh_manager.hpp"

#include "flow_network.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace muran {

std::string_view to_string(Policy p)
{
    switch (p)
    {
    case Policy::NetworkCentric:
        return "NetworkCentric";
    case Policy::UserCentric:
        return "UserCentric";
    case Policy::AlwaysOn:
        return "AlwaysOn";
    }
    throw std::invalid_argument("unknown policy");
}

std::optional<Policy> parse_policy(std::string_view name)
{
    for (Policy p : kAllPolicies)
        if (to_string(p) == name)
            return p;
    return std::nullopt;
}

// ---------- OnOffConfig ----------

OnOffConfig OnOffConfig::all(const Scenario &scenario, bool on)
{
    OnOffConfig c;
    for (const Site &s : scenario.sites)
        if (s.kind == SiteKind::SCBS)
            c.status_[s.id] = std::vector<bool>(static_cast<std::size_t>(s.n_sectors), on);
    return c;
}

bool OnOffConfig::is_on(int site, int sector) const
{
    const auto it = status_.find(site);
    if (it == status_.end() || sector < 0 || static_cast<std::size_t>(sector) >= it->second.size())
        throw std::out_of_range(fmt::format("no sector {} at site {}", sector, site));
    return it->second[static_cast<std::size_t>(sector)];
}

void OnOffConfig::set(int site, int sector, bool on)
{
    const auto it = status_.find(site);
    if (it == status_.end() || sector < 0 || static_cast<std::size_t>(sector) >= it->second.size())
        throw std::out_of_range(fmt::format("no sector {} at site {}", sector, site));
    it->second[static_cast<std::size_t>(sector)] = on;
}

void OnOffConfig::set_site(int site, bool on)
{
    const auto it = status_.find(site);
    if (it == status_.end())
        throw std::out_of_range(fmt::format("no site {}", site));
    std::fill(it->second.begin(), it->second.end(), on);
}

bool OnOffConfig::site_active(int site) const
{
    const auto it = status_.find(site);
    return it != status_.end() && std::find(it->second.begin(), it->second.end(), true) != it->second.end();
}

int OnOffConfig::on_count() const
{
    int n = 0;
    for (const auto &[site, v] : status_)
        n += static_cast<int>(std::count(v.begin(), v.end(), true));
    return n;
}

int OnOffConfig::off_count() const
{
    int n = 0;
    for (const auto &[site, v] : status_)
        n += static_cast<int>(std::count(v.begin(), v.end(), false));
    return n;
}

int OnOffConfig::active_sites() const
{
    int n = 0;
    for (const auto &[site, v] : status_)
        n += std::find(v.begin(), v.end(), true) != v.end() ? 1 : 0;
    return n;
}

// ---------- Assignment / graph helpers ----------

std::int64_t Assignment::offered_bps() const
{
    std::int64_t s = 0;
    for (const UserServing &u : users)
        s += u.demand_bps;
    return s;
}

std::int64_t Assignment::lte_admitted_bps() const
{
    const auto it = admitted_bps.find(0);
    return it == admitted_bps.end() ? 0 : it->second;
}

std::size_t Assignment::lte_users() const
{
    return static_cast<std::size_t>(
        std::count_if(users.begin(), users.end(), [](const UserServing &u) { return u.site_id == 0; }));
}

int BackhaulGraph::max_hops() const
{
    // Longest positive-flow path from the gateway; flows are acyclic after
    // netting in practice, the visit guard keeps this finite regardless.
    std::map<int, std::vector<int>> out;
    for (const BackhaulLink &l : links)
        out[l.from].push_back(l.to);
    int best = 0;
    std::vector<int> stack;
    std::set<int> on_path;
    auto dfs = [&](auto &self, int u, int depth) -> void {
        best = std::max(best, depth);
        const auto it = out.find(u);
        if (it == out.end())
            return;
        for (int v : it->second)
        {
            if (on_path.count(v))
                continue;
            on_path.insert(v);
            self(self, v, depth + 1);
            on_path.erase(v);
        }
    };
    on_path.insert(gateway);
    dfs(dfs, gateway, 0);
    return best;
}

namespace {

struct UserRadio
{
    int user_id = 0;
    std::int64_t demand = 0;
    double lte_rate = 0.0;
    int best_site = kUnserved;
    int best_sector = -1;
    double mmw_rate = 0.0;
};

std::vector<UserRadio> evaluate_users(const Scenario &scenario, const TrafficSnapshot &snapshot,
                                      const RadioParams &radio)
{
    if (snapshot.demands_bps.size() != scenario.users.size())
        throw std::invalid_argument("traffic snapshot does not belong to this scenario");
    radio.validate();
    std::vector<UserRadio> out;
    const Site &macro = scenario.gateway();
    for (const User &u : scenario.users)
    {
        if (!scenario.in_evaluation_cell(u.position))
            continue;
        const double d = snapshot.demands_bps[static_cast<std::size_t>(u.id)];
        if (!(d >= 0.0) || !std::isfinite(d))
            throw std::invalid_argument(fmt::format("user {} has invalid demand", u.id));
        UserRadio r;
        r.user_id = u.id;
        r.demand = static_cast<std::int64_t>(std::floor(d));
        r.lte_rate = access_budget(macro, u.position, radio, LinkKind::LteAccess).rate_bps;
        double best_snr = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 1; i < scenario.sites.size(); ++i)
        {
            const Site &s = scenario.sites[i];
            const LinkBudget b = access_budget(s, u.position, radio, LinkKind::MmwLink);
            if (b.rate_bps > 0.0 && b.snr_db > best_snr)
            {
                best_snr = b.snr_db;
                r.best_site = s.id;
                r.best_sector = sector_for_azimuth(azimuth_deg(s.position, u.position), s.n_sectors);
                r.mmw_rate = b.rate_bps;
            }
        }
        out.push_back(r);
    }
    return out;
}

double airtime(std::int64_t demand, double rate)
{
    if (demand == 0)
        return 0.0;
    return rate > 0.0 ? static_cast<double>(demand) / rate : std::numeric_limits<double>::infinity();
}

constexpr double kAirtimeSlack = 1e-12;

std::vector<std::size_t> ascending_demand(const std::vector<UserRadio> &users)
{
    std::vector<std::size_t> order(users.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return users[a].demand < users[b].demand; });
    return order;
}

class AssignmentBuilder
{
  public:
    explicit AssignmentBuilder(const std::vector<UserRadio> &users) : users_(users)
    {
        asg_.users.resize(users.size());
        for (std::size_t i = 0; i < users.size(); ++i)
        {
            asg_.users[i].user_id = users[i].user_id;
            asg_.users[i].demand_bps = users[i].demand;
        }
    }

    bool placed(std::size_t i) const { return asg_.users[i].site_id != kUnserved; }

    // Returns false once the LTE budget cannot take user i.
    bool try_lte(std::size_t i)
    {
        const double need = airtime(users_[i].demand, users_[i].lte_rate);
        if (asg_.lte_airtime + need > 1.0 + kAirtimeSlack)
            return false;
        asg_.lte_airtime += need;
        place(i, 0, -1);
        return true;
    }

    bool try_mmw(std::size_t i)
    {
        const UserRadio &u = users_[i];
        if (u.best_site == kUnserved)
            return false;
        double &used = asg_.sector_airtime[{u.best_site, u.best_sector}];
        const double need = airtime(u.demand, u.mmw_rate);
        if (used + need > 1.0 + kAirtimeSlack)
            return false;
        used += need;
        place(i, u.best_site, u.best_sector);
        return true;
    }

    Assignment finish() { return std::move(asg_); }

  private:
    void place(std::size_t i, int site, int sector)
    {
        UserServing &s = asg_.users[i];
        s.site_id = site;
        s.sector = sector;
        s.admitted_bps = s.demand_bps;
        asg_.admitted_bps[site] += s.demand_bps;
    }

    const std::vector<UserRadio> &users_;
    Assignment asg_;
};

// LTE first (ascending demand, stop when exhausted), then best mmWave sector.
Assignment assign_lte_first(const std::vector<UserRadio> &users)
{
    AssignmentBuilder b(users);
    const auto order = ascending_demand(users);
    for (std::size_t i : order)
        if (!b.try_lte(i))
            break;
    for (std::size_t i : order)
        if (!b.placed(i))
            b.try_mmw(i);
    return b.finish();
}

// Best mmWave sector first; users it cannot take fall back to LTE.
Assignment assign_mmw_first(const std::vector<UserRadio> &users)
{
    AssignmentBuilder b(users);
    const auto order = ascending_demand(users);
    for (std::size_t i : order)
        b.try_mmw(i);
    for (std::size_t i : order)
        if (!b.placed(i) && !b.try_lte(i))
            break;
    return b.finish();
}

BackhaulGraph export_graph(const detail::FlowNetwork &net, const std::vector<int> &relays)
{
    BackhaulGraph g;
    g.gateway = 0;
    g.nodes.push_back(0);
    const auto &sectors = net.sector_state();
    for (int v = 1; v < net.n_nodes(); ++v)
    {
        const auto &st = sectors[static_cast<std::size_t>(v)];
        if (std::find(st.begin(), st.end(), true) == st.end())
            continue;
        g.nodes.push_back(v);
        g.demand_bps[v] = net.demand(v);
        g.routed_bps[v] = net.demand(v) - net.remaining(v);
        if (net.remaining(v) > 0)
            g.isolated.push_back(v);
    }
    g.links = net.positive_links();
    g.relays = relays;
    return g;
}

OnOffConfig export_onoff(const detail::FlowNetwork &net, const OnOffConfig &like)
{
    OnOffConfig out = like;
    const auto &sectors = net.sector_state();
    for (auto &[site, status] : out.sectors())
        for (std::size_t k = 0; k < status.size(); ++k)
            status[k] = sectors[static_cast<std::size_t>(site)][k];
    return out;
}

void prepare(detail::FlowNetwork &net, const OnOffConfig &onoff, const std::map<int, std::int64_t> &demand)
{
    net.load_sectors(onoff);
    for (const auto &[site, status] : onoff.sectors())
        net.set_traversable(site, onoff.site_active(site));
    for (const auto &[site, d] : demand)
    {
        if (site == 0 || d == 0)
            continue;
        if (!onoff.site_active(site))
            throw std::invalid_argument(fmt::format("SC-BS {} carries demand but has no sector on", site));
        net.set_demand(site, d);
    }
}

} // namespace

std::pair<OnOffConfig, Assignment> step_initial_onoff(const Scenario &scenario, const TrafficSnapshot &snapshot,
                                                      const RadioParams &radio)
{
    const auto users = evaluate_users(scenario, snapshot, radio);
    Assignment asg = assign_lte_first(users);
    OnOffConfig onoff = OnOffConfig::all(scenario, false);
    for (const UserServing &u : asg.users)
        if (u.site_id > 0 && u.admitted_bps > 0)
            onoff.set(u.site_id, u.sector, true);
    return {std::move(onoff), std::move(asg)};
}

BackhaulGraph step_path_creation(const Scenario &scenario, const OnOffConfig &onoff, const Assignment &assignment,
                                 const RadioParams &radio, const MeshOptions &options)
{
    detail::FlowNetwork net(scenario, radio, options.routing_cost);
    prepare(net, onoff, assignment.admitted_bps);
    net.route_all();
    return export_graph(net, {});
}

OnOffConfig with_backhaul_sectors(const OnOffConfig &onoff, const BackhaulGraph &graph)
{
    OnOffConfig out = onoff;
    for (const BackhaulLink &l : graph.links)
    {
        if (l.from != graph.gateway)
            out.set(l.from, l.from_sector, true);
        if (l.to != graph.gateway)
            out.set(l.to, l.to_sector, true);
    }
    return out;
}

std::pair<OnOffConfig, BackhaulGraph> step_reactivation(const Scenario &scenario, const BackhaulGraph &graph,
                                                        const OnOffConfig &onoff, const RadioParams &radio,
                                                        const MeshOptions &options)
{
    if (graph.isolated.empty())
        return {onoff, graph};

    detail::FlowNetwork net(scenario, radio, options.routing_cost);
    prepare(net, onoff, graph.demand_bps);
    net.load_flows(graph.links);

    std::set<int> was_active;
    for (const auto &[site, status] : onoff.sectors())
        if (onoff.site_active(site))
            was_active.insert(site);

    // Greedy: each round tries, for every isolated node, the residual path
    // that wakes the fewest sleeping SC-BSs, and commits the set with the
    // most isolated nodes reconnected per reactivated node.
    while (net.total_remaining() > 0)
    {
        std::vector<int> isolated;
        for (int v = 1; v < net.n_nodes(); ++v)
            if (net.remaining(v) > 0)
                isolated.push_back(v);

        std::set<std::vector<int>> candidates;
        for (int v : isolated)
            if (auto path = net.cheapest_reactivation(v); path && !path->empty())
                candidates.insert(*path);
        if (candidates.empty())
            break;

        struct Trial
        {
            std::vector<int> wake;
            int reconnected = 0;
            std::int64_t gain = 0;
            int new_sectors = 0;
        };
        std::optional<Trial> best;
        std::optional<detail::FlowNetwork> best_net;
        const std::int64_t before = net.total_remaining();
        const int sectors_before = net.sectors_on();

        for (const std::vector<int> &wake : candidates)
        {
            detail::FlowNetwork trial_net = net;
            for (int v : wake)
                trial_net.set_traversable(v, true);
            trial_net.route_all();
            Trial t{wake, 0, before - trial_net.total_remaining(), trial_net.sectors_on() - sectors_before};
            for (int v : isolated)
                t.reconnected += trial_net.remaining(v) == 0 ? 1 : 0;
            if (t.gain <= 0)
                continue;

            bool better = !best;
            if (best)
            {
                const auto lhs = static_cast<std::int64_t>(t.reconnected) * static_cast<std::int64_t>(best->wake.size());
                const auto rhs = static_cast<std::int64_t>(best->reconnected) * static_cast<std::int64_t>(t.wake.size());
                if (lhs != rhs)
                    better = lhs > rhs;
                else if (t.new_sectors != best->new_sectors)
                    better = t.new_sectors < best->new_sectors;
                else
                    better = t.wake < best->wake;
            }
            if (better)
            {
                best = t;
                best_net = std::move(trial_net);
            }
        }
        if (!best)
            break;
        net = std::move(*best_net);
    }

    std::vector<int> relays = graph.relays;
    const auto &sectors = net.sector_state();
    for (int v = 1; v < net.n_nodes(); ++v)
    {
        const auto &st = sectors[static_cast<std::size_t>(v)];
        if (!was_active.count(v) && std::find(st.begin(), st.end(), true) != st.end())
            relays.push_back(v);
    }
    std::sort(relays.begin(), relays.end());
    relays.erase(std::unique(relays.begin(), relays.end()), relays.end());
    return {export_onoff(net, onoff), export_graph(net, relays)};
}

MeshState run_policy(Policy policy, const Scenario &scenario, const TrafficSnapshot &snapshot,
                     const RadioParams &radio, const MeshOptions &options)
{
    MeshState st;
    st.policy = policy;
    switch (policy)
    {
    case Policy::NetworkCentric: {
        auto [onoff, asg] = step_initial_onoff(scenario, snapshot, radio);
        BackhaulGraph g = step_path_creation(scenario, onoff, asg, radio, options);
        auto [final_onoff, final_graph] =
            step_reactivation(scenario, g, with_backhaul_sectors(onoff, g), radio, options);
        st.onoff = std::move(final_onoff);
        st.graph = std::move(final_graph);
        st.assignment = std::move(asg);
        break;
    }
    case Policy::UserCentric: {
        const auto users = evaluate_users(scenario, snapshot, radio);
        Assignment asg = assign_mmw_first(users);
        OnOffConfig onoff = OnOffConfig::all(scenario, false);
        for (const UserRadio &u : users)
            if (u.best_site != kUnserved)
                onoff.set_site(u.best_site, true);
        BackhaulGraph g = step_path_creation(scenario, onoff, asg, radio, options);
        auto [final_onoff, final_graph] =
            step_reactivation(scenario, g, with_backhaul_sectors(onoff, g), radio, options);
        st.onoff = std::move(final_onoff);
        st.graph = std::move(final_graph);
        st.assignment = std::move(asg);
        break;
    }
    case Policy::AlwaysOn: {
        const auto users = evaluate_users(scenario, snapshot, radio);
        Assignment asg = assign_mmw_first(users);
        OnOffConfig onoff = OnOffConfig::all(scenario, true);
        st.graph = step_path_creation(scenario, onoff, asg, radio, options);
        st.onoff = std::move(onoff);
        st.assignment = std::move(asg);
        break;
    }
    default:
        throw std::invalid_argument("unknown policy");
    }

    st.offered_bps = st.assignment.offered_bps();
    st.served_bps = st.assignment.lte_admitted_bps();
    for (const auto &[site, routed] : st.graph.routed_bps)
        st.served_bps += routed;
    st.satisfied_fraction =
        st.offered_bps == 0 ? 1.0 : static_cast<double>(st.served_bps) / static_cast<double>(st.offered_bps);
    return st;
}

} // namespace muran
