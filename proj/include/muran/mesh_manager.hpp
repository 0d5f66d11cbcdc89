// SPDX-License-Identifier: Apache-2.0
//
// Traffic & energy management for a mmWave mesh backhaul.
//
// NetworkCentric runs three steps per traffic snapshot:
//   (i)   offload light users to LTE, switch on only the SC-BS sectors the
//         remaining users need;
//   (ii)  route every active SC-BS's demand to the gateway over active nodes,
//         preferring links that switch on the fewest extra sectors;
//   (iii) reactivate sleeping SC-BSs as relays for nodes left without a
//         feasible route.
// UserCentric and AlwaysOn are the comparison baselines.

#ifndef MURAN_MESH_MANAGER_HPP
#define MURAN_MESH_MANAGER_HPP

#include "muran/radio.hpp"
#include "muran/scenario.hpp"
#include "muran/traffic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace muran {

enum class Policy
{
    NetworkCentric,
    UserCentric,
    AlwaysOn
};

std::string_view to_string(Policy p);
std::optional<Policy> parse_policy(std::string_view name);
inline constexpr Policy kAllPolicies[] = {Policy::NetworkCentric, Policy::UserCentric, Policy::AlwaysOn};

// Per-sector ON/OFF state of every SC-BS. The macro BS is always on and is
// not represented.
class OnOffConfig
{
  public:
    OnOffConfig() = default;
    static OnOffConfig all(const Scenario &scenario, bool on);

    bool is_on(int site, int sector) const;
    void set(int site, int sector, bool on);
    void set_site(int site, bool on);

    bool site_active(int site) const;
    int on_count() const;
    int off_count() const;
    int active_sites() const;

    const std::map<int, std::vector<bool>> &sectors() const { return status_; }
    std::map<int, std::vector<bool>> &sectors() { return status_; }

    friend bool operator==(const OnOffConfig &, const OnOffConfig &) = default;

  private:
    std::map<int, std::vector<bool>> status_;
};

inline constexpr int kUnserved = -1;

struct UserServing
{
    int user_id = 0;
    int site_id = kUnserved; // 0 = LTE macro
    int sector = -1;
    std::int64_t demand_bps = 0;
    std::int64_t admitted_bps = 0;

    friend bool operator==(const UserServing &, const UserServing &) = default;
};

struct Assignment
{
    std::vector<UserServing> users;            // users inside the evaluation cell
    std::map<int, std::int64_t> admitted_bps;  // per serving site (0 = LTE)
    double lte_airtime = 0.0;                  // used share of LTE resource blocks
    std::map<std::pair<int, int>, double> sector_airtime;

    std::int64_t offered_bps() const;
    std::int64_t lte_admitted_bps() const;
    std::size_t lte_users() const;

    friend bool operator==(const Assignment &, const Assignment &) = default;
};

struct BackhaulLink
{
    int from = 0;
    int to = 0;
    int from_sector = 0;
    int to_sector = 0;
    std::int64_t capacity_bps = 0;
    std::int64_t flow_bps = 0;
    double distance_m = 0.0;

    friend bool operator==(const BackhaulLink &, const BackhaulLink &) = default;
};

// Flow is oriented gateway -> SC-BS (downlink). Only flow-carrying links
// are listed.
struct BackhaulGraph
{
    int gateway = 0;
    std::vector<int> nodes;                  // gateway first, then active SC-BSs
    std::vector<BackhaulLink> links;
    std::map<int, std::int64_t> demand_bps;  // aggregated access demand per SC-BS
    std::map<int, std::int64_t> routed_bps;  // net inflow per SC-BS
    std::vector<int> isolated;               // SC-BSs with unrouted demand
    std::vector<int> relays;                 // SC-BSs reactivated only to relay

    // Longest hop count of any positive-flow path from the gateway.
    int max_hops() const;

    friend bool operator==(const BackhaulGraph &, const BackhaulGraph &) = default;
};

enum class RoutingCost
{
    SectorsHopsDistance, // new sectors switched on, then hops, then metres
    HopsDistance
};

struct MeshOptions
{
    RoutingCost routing_cost = RoutingCost::SectorsHopsDistance;
};

struct MeshState
{
    Policy policy = Policy::NetworkCentric;
    OnOffConfig onoff;
    BackhaulGraph graph;
    Assignment assignment;
    std::int64_t offered_bps = 0;
    std::int64_t served_bps = 0;
    double satisfied_fraction = 1.0;

    int active_scbs() const { return onoff.active_sites(); }

    friend bool operator==(const MeshState &, const MeshState &) = default;
};

// Step (i). Users are offered to LTE in ascending-demand order until the
// resource-block budget is exhausted; the rest activate their best-SNR
// SC-BS sector subject to that sector's airtime budget.
std::pair<OnOffConfig, Assignment> step_initial_onoff(const Scenario &scenario, const TrafficSnapshot &snapshot,
                                                      const RadioParams &radio);

// Step (ii). `onoff` gives the active sectors; per-site demand comes from
// the assignment's admitted rates.
BackhaulGraph step_path_creation(const Scenario &scenario, const OnOffConfig &onoff, const Assignment &assignment,
                                 const RadioParams &radio, const MeshOptions &options = {});

// Sectors of `onoff` plus both end sectors of every link in `graph`.
OnOffConfig with_backhaul_sectors(const OnOffConfig &onoff, const BackhaulGraph &graph);

// Step (iii). `onoff` must already include the backhaul sectors of `graph`.
std::pair<OnOffConfig, BackhaulGraph> step_reactivation(const Scenario &scenario, const BackhaulGraph &graph,
                                                        const OnOffConfig &onoff, const RadioParams &radio,
                                                        const MeshOptions &options = {});

MeshState run_policy(Policy policy, const Scenario &scenario, const TrafficSnapshot &snapshot,
                     const RadioParams &radio, const MeshOptions &options = {});

} // namespace muran

#endif
