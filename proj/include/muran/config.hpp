// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration: JSON schema, defaults and keyed diagnostics.

#ifndef MURAN_CONFIG_HPP
#define MURAN_CONFIG_HPP

#include "muran/energy.hpp"
#include "muran/linklevel.hpp"
#include "muran/mesh_manager.hpp"
#include "muran/radio.hpp"
#include "muran/scenario.hpp"
#include "muran/traffic.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace muran {

struct LinkLevelSweep
{
    bool enabled = false;
    LinkLevelParams params;
    double snr_start_db = -10.0;
    double snr_stop_db = 40.0;
    double snr_step_db = 2.0;
    int n_draws = 10000;

    std::vector<double> grid() const;
};

struct ExperimentConfig
{
    ScenarioConfig scenario;
    TrafficProfile traffic = diurnal_default();
    RadioParams radio;
    PowerModel power;
    MeshOptions mesh;
    std::vector<Policy> policies{Policy::NetworkCentric, Policy::UserCentric, Policy::AlwaysOn};
    std::vector<int> hours; // ascending; all 24 by default
    std::uint64_t seed = 1;
    int threads = 1;
    LinkLevelSweep linklevel;
    std::string output_dir;

    ExperimentConfig();
};

struct Diagnostic
{
    std::string key; // dotted path, e.g. "power.p_off"
    std::string message;

    friend bool operator==(const Diagnostic &, const Diagnostic &) = default;
};

struct ConfigLoad
{
    std::optional<ExperimentConfig> config; // set iff diagnostics is empty
    std::vector<Diagnostic> diagnostics;
};

class ConfigFileError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// `base_dir` resolves relative file references (radio.mcs_csv).
ConfigLoad parse_config(const nlohmann::json &doc, const std::string &base_dir = ".");
ConfigLoad parse_config_text(const std::string &text, const std::string &base_dir = ".");

// Throws ConfigFileError if the file cannot be read.
ConfigLoad load_config(const std::string &path);
std::vector<Diagnostic> validate_config(const std::string &path);

// Canonical JSON of the effective configuration (output_dir excluded).
nlohmann::json to_json(const ExperimentConfig &config);

} // namespace muran

#endif
