// SPDX-License-Identifier: Apache-2.0
//
// Experiment driver: hour x policy matrix, optional link-level sweep and the
// on-disk artifact set.
//
// Seeds: scenario  derive_seed(master, any, any, "scenario")
//        traffic   derive_seed(master, hour, any, "traffic"), shared by all policies
//        sweep     derive_seed(master, any, any, "linklevel")

#ifndef MURAN_RUNNER_HPP
#define MURAN_RUNNER_HPP

#include "muran/config.hpp"
#include "muran/energy.hpp"
#include "muran/linklevel.hpp"
#include "muran/mesh_manager.hpp"
#include "muran/scenario.hpp"
#include "muran/traffic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace muran {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int
{
    kExitOk = 0,
    kExitFailure = 1,
    kExitInvalidConfig = 2,
    kExitOutputUnwritable = 3,
    kExitConfigUnreadable = 4,
};

class OutputError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

std::uint64_t scenario_seed(std::uint64_t master);
std::uint64_t traffic_seed(std::uint64_t master, int hour);
std::uint64_t linklevel_seed(std::uint64_t master);

struct ExperimentResult
{
    Scenario scenario;
    std::vector<int> hours;
    std::vector<TrafficSnapshot> snapshots;             // one per hour
    std::map<Policy, std::vector<MeshState>> states;    // index i belongs to hours[i]
    EnergyReport energy;
    std::optional<SEResult> linklevel;
};

// Pure computation; cells run on config.threads workers with identical
// results for any thread count.
ExperimentResult compute_experiment(const ExperimentConfig &config);

// energy.csv: hour,policy,active_sectors,active_scbs,watts,offered_bps,
//             served_bps,satisfied_fraction,isolated,relays,max_hops
std::string energy_csv(const ExperimentResult &result, const ExperimentConfig &config);
// summary.csv: policy,n_hours,energy_wh,always_on_wh,reduction_vs_always_on,
//              mean_active_scbs,min_satisfied_fraction
std::string summary_csv(const ExperimentResult &result);
// linklevel_se.csv: snr_db,mean_se_bps_hz,ci95_bps_hz,throughput_bps
std::string linklevel_csv(const SEResult &se, const LinkLevelParams &params);

std::string sha256_hex(std::string_view data);
std::string config_hash(const ExperimentConfig &config);

// Writes to a sibling temp file and renames it over `path`.
void write_atomic(const std::string &path, std::string_view content);

struct OutputFile
{
    std::string path; // relative to the output directory
    std::string sha256;
    std::uint64_t bytes = 0;
};

struct RunManifest
{
    std::string config_hash;
    std::string tool_version;
    std::vector<OutputFile> outputs;          // sorted by path
    std::map<std::string, double> timings_s;  // wall clock, not reproducible
};

// Throws OutputError if config.output_dir cannot be created or written.
RunManifest run_experiment(const ExperimentConfig &config);

} // namespace muran

#endif
