// SPDX-License-Identifier: Apache-2.0
//
// Capacitated directed backhaul graph over all sites, with per-sector ON
// state, used by the path-creation and reactivation steps.
//
// Node index == site id; node 0 is the gateway. Every directed candidate
// link u->v is stored as a forward edge paired with a zero-capacity reverse
// edge (index ^ 1) so that residual paths can cancel flow.

#ifndef MURAN_FLOW_NETWORK_HPP
#define MURAN_FLOW_NETWORK_HPP

#include "muran/mesh_manager.hpp"
#include "muran/radio.hpp"
#include "muran/scenario.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace muran::detail {

struct FlowEdge
{
    int from = 0;
    int to = 0;
    int from_sector = 0;
    int to_sector = 0;
    std::int64_t capacity = 0;
    std::int64_t flow = 0; // meaningful on forward edges only
    double length_m = 0.0;
    bool forward = true;
};

class FlowNetwork
{
  public:
    FlowNetwork(const Scenario &scenario, const RadioParams &radio, RoutingCost cost);

    int n_nodes() const { return static_cast<int>(adj_.size()); }
    static constexpr int gateway() { return 0; }

    void set_traversable(int node, bool on) { traversable_[static_cast<std::size_t>(node)] = on; }
    bool traversable(int node) const { return traversable_[static_cast<std::size_t>(node)]; }

    void set_demand(int node, std::int64_t demand);
    std::int64_t demand(int node) const { return demand_[static_cast<std::size_t>(node)]; }
    std::int64_t remaining(int node) const { return remaining_[static_cast<std::size_t>(node)]; }
    std::int64_t total_remaining() const;

    // Base (access) sector state; backhaul sectors are added as flow is placed.
    void load_sectors(const OnOffConfig &onoff);
    bool sector_on(int node, int sector) const;
    int sectors_on() const;

    // Places existing link flows (e.g. from a previous step) onto the network
    // and reduces the remaining demand of each node by its net inflow.
    void load_flows(const std::vector<BackhaulLink> &links);

    // Sector-aware cheapest-path routing for every node with remaining
    // demand, heaviest first, followed by max-flow completion over residual
    // paths. Afterwards remaining(v) > 0 iff no feasible route exists.
    void route_all();

    // Fewest non-traversable nodes on a residual path gateway -> target
    // (then fewest hops). Returns those nodes, or nullopt if none exists.
    std::optional<std::vector<int>> cheapest_reactivation(int target) const;

    // Opposite flows on the same node pair are netted, then sector state is
    // rebuilt from the access sectors plus every flow-carrying link.
    void finalize();

    std::vector<BackhaulLink> positive_links() const;
    const std::vector<std::vector<bool>> &sector_state() const { return sector_on_; }
    const std::vector<FlowEdge> &edges() const { return edges_; }

  private:
    std::int64_t residual(int e) const;
    void push(int e, std::int64_t amount);
    void mark_sectors(int e);
    bool route_cheapest(int target);
    bool augment_any();

    RoutingCost cost_;
    std::vector<int> n_sectors_;
    std::vector<std::vector<int>> adj_;
    std::vector<FlowEdge> edges_;
    std::vector<bool> traversable_;
    std::vector<std::int64_t> demand_;
    std::vector<std::int64_t> remaining_;
    std::vector<std::vector<bool>> access_on_;
    std::vector<std::vector<bool>> sector_on_;
};

} // namespace muran::detail

#endif
