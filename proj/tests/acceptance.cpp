// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: runs every criterion and prints one PASS/FAIL line each.
// Exit status is nonzero if any criterion fails.

#include "oracles.hpp"

#include "muran/config.hpp"
#include "muran/energy.hpp"
#include "muran/linklevel.hpp"
#include "muran/mesh_manager.hpp"
#include "muran/rng.hpp"
#include "muran/runner.hpp"

#include <fmt/format.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <numeric>
#include <sstream>

using namespace muran;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
    bool pass = false;
    std::string detail;
};

// ---------------------------------------------------------------- AC-1

Outcome energy_halving()
{
    double sum = 0.0;
    double worst_s = 0.0;
    std::string per_seed;
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
    {
        ExperimentConfig c;
        c.seed = seed;
        const auto t0 = Clock::now();
        const ExperimentResult r = compute_experiment(c);
        worst_s = std::max(worst_s, since(t0));
        const EnergyReport daily = daily_energy(r.states, sector_counts(r.scenario), c.power);
        const double red = daily.reduction_vs_always_on.at(Policy::NetworkCentric);
        sum += red;
        per_seed += fmt::format("{}{:.3f}", seed == 1 ? "" : " ", red);
    }
    const double mean = sum / 10.0;
    return {mean >= 0.35 && mean <= 0.65 && worst_s < 60.0,
            fmt::format("mean NetworkCentric reduction {:.4f} in [0.35, 0.65] (per seed: {}); slowest 24h x 3 "
                        "matrix {:.2f} s < 60 s",
                        mean, per_seed, worst_s)};
}

// ---------------------------------------------------------------- AC-2

// Longest flow-path depth (in links) of every node reachable from the gateway.
std::map<int, int> flow_depth(const BackhaulGraph &g)
{
    std::map<int, int> depth{{g.gateway, 0}};
    // Flows form a DAG after cancellation; relax |V| times.
    for (std::size_t round = 0; round <= g.nodes.size(); ++round)
        for (const BackhaulLink &l : g.links)
            if (l.flow_bps > 0 && depth.count(l.from))
                depth[l.to] = std::max(depth[l.to], depth[l.from] + 1);
    return depth;
}

Outcome night_day_contrast()
{
    ExperimentConfig c;
    c.hours = {3, 15};
    c.policies = {Policy::NetworkCentric};
    const ExperimentResult r = compute_experiment(c);
    const MeshState &night = r.states.at(Policy::NetworkCentric)[0];
    const MeshState &day = r.states.at(Policy::NetworkCentric)[1];
    const int n_scbs = static_cast<int>(r.scenario.n_scbs());

    // SC-BSs that serve users standing in an in-cell hotspot (within 3 radii).
    std::set<int> hotspot_servers;
    for (const Hotspot &h : c.traffic.hotspots)
    {
        if (!r.scenario.in_evaluation_cell(h.center))
            continue;
        for (const UserServing &u : day.assignment.users)
            if (u.site_id > 0 && u.admitted_bps > 0 &&
                distance(r.scenario.users[static_cast<std::size_t>(u.user_id)].position, h.center) <= 3.0 * h.radius_m)
                hotspot_servers.insert(u.site_id);
    }
    int multi_hop_to_hotspot = 0;
    for (const auto &[node, d] : flow_depth(day.graph))
        if (d >= 2 && hotspot_servers.count(node))
            ++multi_hop_to_hotspot;

    const bool night_ok = night.active_scbs() * 10 <= n_scbs;
    const bool more_by_day = day.active_scbs() > night.active_scbs();
    return {night_ok && more_by_day && multi_hop_to_hotspot > 0,
            fmt::format("03:00 active {}/{} (<= 10%); 15:00 active {} > {}; hotspot-serving nodes reached over >= 2 "
                        "links at 15:00: {}",
                        night.active_scbs(), n_scbs, day.active_scbs(), night.active_scbs(), multi_hop_to_hotspot)};
}

// ---------------------------------------------------------------- AC-3

Outcome connectivity_invariant()
{
    int checked_nodes = 0;
    int failures = 0;
    int isolated_left = 0;
    int with_relays = 0;
    for (int i = 0; i < 1000; ++i)
    {
        Rng rng(derive_seed(31337, static_cast<std::uint64_t>(i), 0, "acceptance.connectivity"));
        ScenarioConfig sc_cfg;
        sc_cfg.n_scbs = 5 + static_cast<int>(rng.uniform() * 86);
        sc_cfg.n_users = 300 + static_cast<int>(rng.uniform() * 3000);
        const Scenario sc = generate_scenario(sc_cfg, rng.next_u64());
        TrafficProfile tp = diurnal_default();
        tp.scale_factor = 100.0 + 2900.0 * rng.uniform();
        const TrafficSnapshot snap = sample_traffic(sc, tp, static_cast<int>(rng.uniform() * 24), rng.next_u64());
        RadioParams rp;
        // A third of the pairs use a short backhaul range to force relaying.
        if (rng.uniform() < 1.0 / 3.0)
            rp.mmw_tx_power_dbm = rng.uniform(-25.0, 0.0);

        for (Policy p : kAllPolicies)
        {
            const MeshState st = run_policy(p, sc, snap, rp);
            const oracle::FlowAudit a = oracle::audit(sc, rp, st);
            const auto reach = oracle::reachable_by_flow(st.graph);
            bool ok = a.capacity_ok && a.conservation_ok && a.endpoints_on && a.capacities_match;
            for (const auto &[site, routed] : st.graph.routed_bps)
                if (routed > 0)
                {
                    ++checked_nodes;
                    ok = ok && reach.count(site) == 1;
                }
            failures += ok ? 0 : 1;
            isolated_left += static_cast<int>(st.graph.isolated.size());
            with_relays += st.graph.relays.empty() ? 0 : 1;
        }
    }
    return {failures == 0,
            fmt::format("1000 pairs x 3 policies, {} serving SC-BSs checked, {} violations (capacity, conservation, "
                        "reachability); {} states used relays, {} nodes left unroutable",
                        checked_nodes, failures, with_relays, isolated_left)};
}

// ---------------------------------------------------------------- AC-4

Outcome reactivation_oracle()
{
    RadioParams rp;
    rp.mmw_tx_power_dbm = -20.0;
    int instances = 0;
    int feasible = 0;
    int greedy_ok = 0;
    int infeasible_reported = 0;
    long gap_sum = 0;
    int gap_max = 0;
    std::uint64_t draw = 0;
    while (instances < 200)
    {
        Rng rng(derive_seed(4242, draw++, 0, "acceptance.reactivation"));
        const int n = 2 + static_cast<int>(rng.uniform() * 9);
        Scenario sc;
        sc.sites.push_back({0, SiteKind::MacroBS, {1000, 1000}, 25.0, 3, true});
        // Each SC-BS lands 40-110 m from an earlier site, so relaying is usually possible.
        for (int k = 1; k <= n; ++k)
        {
            const Vec2 anchor = sc.sites[static_cast<std::size_t>(rng.uniform() * k)].position;
            const double r = rng.uniform(40.0, 110.0);
            const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
            sc.sites.push_back({k, SiteKind::SCBS, {anchor.x + r * std::cos(a), anchor.y + r * std::sin(a)}, 4.0, 3,
                                false});
        }
        std::map<int, std::int64_t> demand;
        for (int k = 1; k <= n; ++k)
            if (rng.uniform() < 0.45)
                demand[k] = static_cast<std::int64_t>(rng.uniform(5e7, 2e9));
        if (demand.empty())
            continue;

        OnOffConfig on = OnOffConfig::all(sc, false);
        Assignment asg;
        std::set<int> active;
        for (const auto &[k, d] : demand)
        {
            on.set(k, 0, true);
            asg.admitted_bps[k] = d;
            active.insert(k);
        }
        const BackhaulGraph g = step_path_creation(sc, on, asg, rp);
        if (g.isolated.empty())
            continue; // only instances that need step (iii)
        ++instances;

        const auto [on3, g3] = step_reactivation(sc, g, with_backhaul_sectors(on, g), rp);
        const auto opt = oracle::min_reactivation(sc, rp, active, demand);
        if (opt)
        {
            ++feasible;
            if (g3.isolated.empty())
            {
                ++greedy_ok;
                const int gap = static_cast<int>(g3.relays.size()) - *opt;
                gap_sum += gap;
                gap_max = std::max(gap_max, gap);
            }
        }
        else if (!g3.isolated.empty())
            ++infeasible_reported;
    }
    const double mean_gap = feasible > 0 ? static_cast<double>(gap_sum) / greedy_ok : 0.0;
    return {greedy_ok == feasible && infeasible_reported == instances - feasible,
            fmt::format("{} instances needing relays: {} feasible, greedy feasible on {}/{}; {} infeasible reported "
                        "as isolated; greedy-optimal reactivation gap mean {:.3f}, max {}",
                        instances, feasible, greedy_ok, feasible, infeasible_reported, mean_gap, gap_max)};
}

// ---------------------------------------------------------------- AC-5

Outcome link_level()
{
    const LinkLevelParams p;
    std::vector<double> grid;
    for (double s = -10.0; s <= 50.0; s += 2.0)
        grid.push_back(s);
    const auto t0 = Clock::now();
    const SEResult r = sweep_snr(p, grid, 10000, 1);
    const double secs = since(t0);
    double worst_drop = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        worst_drop = std::max(worst_drop, r.mean_se_bps_hz[i - 1] - r.mean_se_bps_hz[i]);
    const double peak = *std::max_element(r.mean_se_bps_hz.begin(), r.mean_se_bps_hz.end());
    double first_10 = std::nan("");
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (r.mean_se_bps_hz[i] >= 10.0)
        {
            first_10 = grid[i];
            break;
        }
    const double tput = throughput_bps(10.0, p);
    const bool ok = worst_drop <= 0.05 && peak <= 12.8 && peak >= 10.0 && secs < 10.0 && tput == 5.0e9;
    return {ok, fmt::format("{} points x 10^4 draws in {:.2f} s; largest drop {:.4f}; peak mean SE {:.4f} <= 12.8; "
                            ">= 10 bps/Hz from {} dB; 8 CC x 125 MHz x SE 10 x 0.5 = {:.1f} Gbps",
                            grid.size(), secs, worst_drop, peak, first_10, tput / 1e9)};
}

// ---------------------------------------------------------------- AC-6

Outcome energy_formula()
{
    ScenarioConfig c;
    c.n_users = 0;
    const Scenario sc = generate_scenario(c, 1);
    const auto ns = sector_counts(sc);
    const PowerModel pm;
    bool ok = config_power(OnOffConfig::all(sc, true), ns, pm) == 270 * 6.67 &&
              config_power(OnOffConfig::all(sc, false), ns, pm) == 270 * 0.67 &&
              std::abs(config_power(OnOffConfig::all(sc, true), ns, pm) - 1800.9) < 1e-9 &&
              std::abs(config_power(OnOffConfig::all(sc, false), ns, pm) - 180.9) < 1e-9;

    Rng rng(99);
    int mixed_ok = 0;
    for (int t = 0; t < 10; ++t)
    {
        OnOffConfig on = OnOffConfig::all(sc, false);
        int n_on = 0;
        for (int s = 1; s <= 90; ++s)
            for (int k = 0; k < 3; ++k)
                if (rng.uniform() < 0.4)
                {
                    on.set(s, k, true);
                    ++n_on;
                }
        mixed_ok += config_power(on, ns, pm) == n_on * 6.67 + (270 - n_on) * 0.67 ? 1 : 0;
    }
    ok = ok && mixed_ok == 10;

    int fuzz_ok = 0;
    for (int t = 0; t < 1000; ++t)
    {
        const int n = 1 + static_cast<int>(rng.uniform() * 90);
        const int sectors = rng.uniform() < 0.5 ? 3 : 4;
        Scenario f;
        f.sites.push_back({0, SiteKind::MacroBS, {1000, 1000}, 25.0, 3, true});
        for (int i = 1; i <= n; ++i)
            f.sites.push_back({i, SiteKind::SCBS, {1000.0 + i, 990.0}, 4.0, sectors, false});
        const auto fns = sector_counts(f);
        OnOffConfig on = OnOffConfig::all(f, false);
        for (int i = 1; i <= n; ++i)
            for (int k = 0; k < sectors; ++k)
                on.set(i, k, rng.uniform() < 0.5);
        const double p_off = rng.uniform(0.0, 10.0);
        const PowerModel m(p_off + rng.uniform(1e-3, 50.0), p_off);
        const double p = config_power(on, fns, m);
        const double total = n * sectors;
        const double c2 = rng.uniform(0.01, 100.0);
        const bool lin = config_power(on, fns, m.scaled(2.0)) == 2.0 * p &&
                         std::abs(config_power(on, fns, m.scaled(c2)) - c2 * p) <= 1e-12 * c2 * p;
        const bool bounds = p >= total * m.p_off_w() && p <= total * m.p_on_w();
        fuzz_ok += lin && bounds ? 1 : 0;
    }
    ok = ok && fuzz_ok == 1000;
    return {ok, fmt::format("all-On 1800.9 W and all-Off 180.9 W exact; mixed {}/10 exact; fuzz linearity and bounds "
                            "{}/1000",
                            mixed_ok, fuzz_ok)};
}

// ---------------------------------------------------------------- AC-7

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Every emitted file, with the manifest's wall-clock timings removed.
std::map<std::string, std::string> artifact_bytes(const fs::path &dir)
{
    std::map<std::string, std::string> out;
    for (const auto &e : fs::recursive_directory_iterator(dir))
    {
        if (!e.is_regular_file())
            continue;
        const std::string rel = fs::relative(e.path(), dir).generic_string();
        std::string bytes = slurp(e.path());
        if (rel == "manifest.json")
        {
            auto j = nlohmann::json::parse(bytes);
            j.erase("timings_s");
            bytes = j.dump();
        }
        out[rel] = std::move(bytes);
    }
    return out;
}

Outcome determinism()
{
    const fs::path root = fs::temp_directory_path() / "muran_acceptance_determinism";
    fs::remove_all(root);
    ConfigLoad load = load_config(std::string(MURAN_SOURCE_DIR) + "/configs/default.json");
    if (!load.config)
        return {false, "bundled default configuration did not load"};
    ExperimentConfig c = *load.config;
    c.linklevel.enabled = true;

    c.output_dir = (root / "serial_a").string();
    run_experiment(c);
    c.output_dir = (root / "serial_b").string();
    run_experiment(c);
    c.threads = 4;
    c.output_dir = (root / "parallel").string();
    run_experiment(c);

    const auto a = artifact_bytes(root / "serial_a");
    const auto b = artifact_bytes(root / "serial_b");
    auto p = artifact_bytes(root / "parallel");
    // The manifest records the thread count as part of the configuration.
    const bool reruns = a == b;
    bool parallel = a.size() == p.size();
    for (const auto &[name, bytes] : a)
        if (name != "manifest.json")
            parallel = parallel && p.count(name) && p.at(name) == bytes;
    fs::remove_all(root);
    return {reruns && parallel && a.size() > 70,
            fmt::format("{} files per run; rerun byte-identical: {}; serial vs 4 threads identical: {}", a.size(),
                        reruns ? "yes" : "no", parallel ? "yes" : "no")};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"AC-1 energy halving", energy_halving},          {"AC-2 night/day contrast", night_day_contrast},
        {"AC-3 connectivity invariant", connectivity_invariant}, {"AC-4 step-iii oracle", reactivation_oracle},
        {"AC-5 link-level SE", link_level},               {"AC-6 energy formula", energy_formula},
        {"AC-7 determinism", determinism},
    };
    int failed = 0;
    for (const auto &[name, run] : criteria)
    {
        Outcome o;
        const auto t0 = Clock::now();
        try
        {
            o = run();
        }
        catch (const std::exception &e)
        {
            o = {false, fmt::format("exception: {}", e.what())};
        }
        failed += o.pass ? 0 : 1;
        std::cout << fmt::format("{} {}: {} [{:.1f} s]", o.pass ? "PASS" : "FAIL", name, o.detail, since(t0))
                  << std::endl;
    }
    std::cout << fmt::format("{} of {} criteria passed", criteria.size() - static_cast<std::size_t>(failed),
                             criteria.size())
              << std::endl;
    return failed == 0 ? 0 : 1;
}
