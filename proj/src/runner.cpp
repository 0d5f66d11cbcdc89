// SPDX-License-Identifier: Apache-2.0

#include "muran/runner.hpp"

#include "muran/rng.hpp"
#include "muran/serialize.hpp"

#include <fmt/format.h>
#include <openssl/evp.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

namespace muran {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs job(i) for i in [0, n) on up to `threads` workers. The first
// exception is rethrown after all workers stop.
template <class Job>
void parallel_for(std::size_t n, int threads, Job job)
{
    const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 256));
    if (workers == 1 || n <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, n); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
            {
                try
                {
                    job(i);
                }
                catch (...)
                {
                    std::lock_guard lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next = n;
                }
            }
        });
    for (auto &t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

std::string fixed(double v)
{
    return fmt::format("{:.6f}", v);
}

} // namespace

std::uint64_t scenario_seed(std::uint64_t master)
{
    return derive_seed(master, kAnySlot, kAnySlot, "scenario");
}

std::uint64_t traffic_seed(std::uint64_t master, int hour)
{
    return derive_seed(master, static_cast<std::uint32_t>(hour), kAnySlot, "traffic");
}

std::uint64_t linklevel_seed(std::uint64_t master)
{
    return derive_seed(master, kAnySlot, kAnySlot, "linklevel");
}

ExperimentResult compute_experiment(const ExperimentConfig &config)
{
    ExperimentResult out;
    out.hours = config.hours;
    out.scenario = generate_scenario(config.scenario, scenario_seed(config.seed));

    out.snapshots.resize(config.hours.size());
    parallel_for(config.hours.size(), config.threads, [&](std::size_t i) {
        const int h = config.hours[i];
        out.snapshots[i] = sample_traffic(out.scenario, config.traffic, h, traffic_seed(config.seed, h));
    });

    for (Policy p : config.policies)
        out.states[p].resize(config.hours.size());
    const std::size_t n_pol = config.policies.size();
    parallel_for(config.hours.size() * n_pol, config.threads, [&](std::size_t cell) {
        const std::size_t hi = cell / n_pol;
        const Policy p = config.policies[cell % n_pol];
        out.states.at(p)[hi] = run_policy(p, out.scenario, out.snapshots[hi], config.radio, config.mesh);
        spdlog::debug("hour {:02d} {}: {} SC-BSs active", config.hours[hi], to_string(p),
                      out.states.at(p)[hi].active_scbs());
    });

    out.energy = aggregate_energy(out.states, config.hours, sector_counts(out.scenario), config.power);

    if (config.linklevel.enabled)
        out.linklevel = sweep_snr(config.linklevel.params, config.linklevel.grid(), config.linklevel.n_draws,
                                  linklevel_seed(config.seed), config.threads);
    return out;
}

std::string energy_csv(const ExperimentResult &result, const ExperimentConfig &config)
{
    const auto n_sectors = sector_counts(result.scenario);
    std::string s = "hour,policy,active_sectors,active_scbs,watts,offered_bps,served_bps,satisfied_fraction,"
                    "isolated,relays,max_hops\r\n";
    for (std::size_t i = 0; i < result.hours.size(); ++i)
        for (const auto &[policy, states] : result.states)
        {
            const MeshState &st = states[i];
            s += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\r\n", result.hours[i], to_string(policy),
                             st.onoff.on_count(), st.active_scbs(),
                             fixed(config_power(st.onoff, n_sectors, config.power)), st.offered_bps, st.served_bps,
                             fixed(st.satisfied_fraction), st.graph.isolated.size(), st.graph.relays.size(),
                             st.graph.max_hops());
        }
    return s;
}

std::string summary_csv(const ExperimentResult &result)
{
    const EnergyReport &e = result.energy;
    const double all_on_wh =
        static_cast<double>(e.total_sectors) * e.model.p_on_w() * static_cast<double>(e.hours.size());
    std::string s = "policy,n_hours,energy_wh,always_on_wh,reduction_vs_always_on,mean_active_scbs,"
                    "min_satisfied_fraction\r\n";
    for (const auto &[policy, states] : result.states)
    {
        double active = 0.0;
        double min_sat = 1.0;
        for (const MeshState &st : states)
        {
            active += st.active_scbs();
            min_sat = std::min(min_sat, st.satisfied_fraction);
        }
        s += fmt::format("{},{},{},{},{},{},{}\r\n", to_string(policy), states.size(), fixed(e.energy_wh.at(policy)),
                         fixed(all_on_wh), fixed(e.reduction_vs_always_on.at(policy)),
                         fixed(states.empty() ? 0.0 : active / static_cast<double>(states.size())), fixed(min_sat));
    }
    return s;
}

std::string linklevel_csv(const SEResult &se, const LinkLevelParams &params)
{
    std::string s = "snr_db,mean_se_bps_hz,ci95_bps_hz,throughput_bps\r\n";
    for (std::size_t i = 0; i < se.snr_grid_db.size(); ++i)
        s += fmt::format("{},{},{},{}\r\n", fixed(se.snr_grid_db[i]), fixed(se.mean_se_bps_hz[i]), fixed(se.ci95[i]),
                         fixed(throughput_bps(se.mean_se_bps_hz[i], params)));
    return s;
}

std::string sha256_hex(std::string_view data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    std::string hex;
    hex.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
        hex += fmt::format("{:02x}", digest[i]);
    return hex;
}

std::string config_hash(const ExperimentConfig &config)
{
    return sha256_hex(to_json(config).dump());
}

void write_atomic(const std::string &path, std::string_view content)
{
    const fs::path target(path);
    fs::path tmp = target;
    tmp += fmt::format(".tmp{}", std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw OutputError(fmt::format("cannot write '{}'", tmp.string()));
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f)
        {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw OutputError(fmt::format("cannot write '{}'", tmp.string()));
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec)
    {
        fs::remove(tmp, ec);
        throw OutputError(fmt::format("cannot rename onto '{}'", target.string()));
    }
}

RunManifest run_experiment(const ExperimentConfig &config)
{
    const auto t_start = Clock::now();
    const fs::path dir(config.output_dir.empty() ? "." : config.output_dir);
    std::error_code ec;
    fs::create_directories(dir / "topology", ec);
    if (ec)
        throw OutputError(fmt::format("cannot create output directory '{}': {}", dir.string(), ec.message()));
    write_atomic((dir / ".write_probe").string(), "");
    fs::remove(dir / ".write_probe", ec);

    RunManifest m;
    m.tool_version = std::string(kToolVersion);
    m.config_hash = config_hash(config);

    auto t0 = Clock::now();
    spdlog::info("running {} hours x {} policies", config.hours.size(), config.policies.size());
    const ExperimentResult result = compute_experiment(config);
    m.timings_s["compute"] = seconds_since(t0);

    t0 = Clock::now();
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("scenario.json", to_json(result.scenario).dump(2) + "\n");
    files.emplace_back("energy.csv", energy_csv(result, config));
    files.emplace_back("summary.csv", summary_csv(result));
    for (std::size_t i = 0; i < result.hours.size(); ++i)
        for (const auto &[policy, states] : result.states)
            files.emplace_back(fmt::format("topology/hour_{:02d}_{}.json", result.hours[i], to_string(policy)),
                               to_json(states[i], result.scenario, result.hours[i]).dump(2) + "\n");
    if (result.linklevel)
        files.emplace_back("linklevel_se.csv", linklevel_csv(*result.linklevel, config.linklevel.params));

    for (const auto &[name, content] : files)
    {
        write_atomic((dir / name).string(), content);
        m.outputs.push_back({name, sha256_hex(content), content.size()});
    }
    std::sort(m.outputs.begin(), m.outputs.end(),
              [](const OutputFile &a, const OutputFile &b) { return a.path < b.path; });
    m.timings_s["write"] = seconds_since(t0);
    m.timings_s["total"] = seconds_since(t_start);

    nlohmann::json outputs = nlohmann::json::array();
    for (const OutputFile &o : m.outputs)
        outputs.push_back({{"path", o.path}, {"sha256", o.sha256}, {"bytes", o.bytes}});
    const nlohmann::json manifest = {{"tool_version", m.tool_version},
                                     {"config_hash", m.config_hash},
                                     {"seed", config.seed},
                                     {"config", to_json(config)},
                                     {"outputs", outputs},
                                     {"timings_s", m.timings_s}};
    write_atomic((dir / "manifest.json").string(), manifest.dump(2) + "\n");
    spdlog::info("wrote {} files to {}", m.outputs.size() + 1, dir.string());
    return m;
}

} // namespace muran
