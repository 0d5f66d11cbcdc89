// SPDX-License-Identifier: Apache-2.0
//
// JSON views of the simulation objects (golden files, topology snapshots).

#ifndef MURAN_SERIALIZE_HPP
#define MURAN_SERIALIZE_HPP

#include "muran/mesh_manager.hpp"
#include "muran/scenario.hpp"
#include "muran/traffic.hpp"

#include <json.hpp>

namespace muran {

nlohmann::json to_json(const Scenario &scenario);
nlohmann::json to_json(const TrafficSnapshot &snapshot);

// Topology snapshot: node positions with per-sector status, flow-carrying
// links with capacity, isolated nodes, relays and the service summary.
nlohmann::json to_json(const MeshState &state, const Scenario &scenario, int hour);

} // namespace muran

#endif
