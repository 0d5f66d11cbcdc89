// SPDX-License-Identifier: Apache-2.0

#include "muran/runner.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace muran;
namespace fs = std::filesystem;

namespace {

ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.scenario.n_scbs = 25;
    c.scenario.n_users = 1500;
    return c;
}

fs::path scratch(const std::string &name)
{
    const auto p = fs::temp_directory_path() / ("muran_runner_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string &csv)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < csv.size())
    {
        const auto end = csv.find("\r\n", pos);
        REQUIRE(end != std::string::npos);
        out.push_back(csv.substr(pos, end - pos));
        pos = end + 2;
    }
    return out;
}

} // namespace

TEST_CASE("SHA-256 of known vectors")
{
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("AlwaysOn-only energy table has 24 full rows")
{
    ExperimentConfig c = small_config();
    c.policies = {Policy::AlwaysOn};
    const ExperimentResult r = compute_experiment(c);
    const auto rows = lines(energy_csv(r, c));
    REQUIRE(rows.size() == 25);
    CHECK(rows[0] == "hour,policy,active_sectors,active_scbs,watts,offered_bps,served_bps,satisfied_fraction,"
                     "isolated,relays,max_hops");
    for (std::size_t i = 1; i < rows.size(); ++i)
    {
        CHECK(rows[i].rfind(std::to_string(i - 1) + ",AlwaysOn,75,25,500.250000,", 0) == 0);
    }
    const auto summary = lines(summary_csv(r));
    REQUIRE(summary.size() == 2);
    CHECK(summary[1].rfind("AlwaysOn,24,12006.000000,12006.000000,0.000000,", 0) == 0);
}

TEST_CASE("selected hours produce one snapshot per policy and hour")
{
    ExperimentConfig c = small_config();
    c.hours = {3, 15};
    c.output_dir = scratch("hours").string();
    const RunManifest m = run_experiment(c);
    std::set<std::string> topo;
    for (const auto &e : fs::directory_iterator(fs::path(c.output_dir) / "topology"))
        topo.insert(e.path().filename().string());
    CHECK(topo == std::set<std::string>{"hour_03_AlwaysOn.json", "hour_03_NetworkCentric.json",
                                        "hour_03_UserCentric.json", "hour_15_AlwaysOn.json",
                                        "hour_15_NetworkCentric.json", "hour_15_UserCentric.json"});
    CHECK(lines(slurp(fs::path(c.output_dir) / "energy.csv")).size() == 7);
    CHECK_FALSE(fs::exists(fs::path(c.output_dir) / "linklevel_se.csv"));
    for (const OutputFile &o : m.outputs)
        CHECK(sha256_hex(slurp(fs::path(c.output_dir) / o.path)) == o.sha256);
    const auto manifest = nlohmann::json::parse(slurp(fs::path(c.output_dir) / "manifest.json"));
    CHECK(manifest["config_hash"] == m.config_hash);
    CHECK(manifest["tool_version"] == std::string(kToolVersion));
    CHECK(manifest["outputs"].size() == m.outputs.size());
}

TEST_CASE("reruns and thread counts give byte-identical artifacts")
{
    ExperimentConfig c = small_config();
    c.hours = {2, 9, 15, 21};
    c.linklevel.enabled = true;
    c.linklevel.n_draws = 200;
    c.output_dir = scratch("det_a").string();
    const RunManifest a = run_experiment(c);
    c.output_dir = scratch("det_b").string();
    const RunManifest b = run_experiment(c);
    c.threads = 4;
    c.output_dir = scratch("det_c").string();
    const RunManifest p = run_experiment(c);

    CHECK(a.config_hash == b.config_hash);
    REQUIRE(a.outputs.size() == b.outputs.size());
    REQUIRE(a.outputs.size() == p.outputs.size());
    for (std::size_t i = 0; i < a.outputs.size(); ++i)
    {
        CHECK(a.outputs[i].path == b.outputs[i].path);
        CHECK(a.outputs[i].sha256 == b.outputs[i].sha256);
        CHECK(a.outputs[i].sha256 == p.outputs[i].sha256);
    }
    CHECK(slurp(fs::temp_directory_path() / "muran_runner_det_a" / "linklevel_se.csv") ==
          slurp(fs::temp_directory_path() / "muran_runner_det_c" / "linklevel_se.csv"));
}

TEST_CASE("seed changes the outputs")
{
    ExperimentConfig c = small_config();
    c.hours = {15};
    const ExperimentResult a = compute_experiment(c);
    c.seed = 2;
    const ExperimentResult b = compute_experiment(c);
    CHECK(energy_csv(a, c) != energy_csv(b, c));
}

TEST_CASE("traffic is shared across policies within an hour")
{
    ExperimentConfig c = small_config();
    c.hours = {15};
    const ExperimentResult r = compute_experiment(c);
    const auto &nc = r.states.at(Policy::NetworkCentric)[0];
    const auto &ao = r.states.at(Policy::AlwaysOn)[0];
    CHECK(nc.offered_bps == ao.offered_bps);
}

TEST_CASE("unwritable output directory")
{
    const auto blocker = scratch("blocker");
    fs::create_directories(blocker.parent_path());
    {
        std::ofstream f(blocker);
        f << "not a directory";
    }
    ExperimentConfig c = small_config();
    c.hours = {3};
    c.output_dir = (blocker / "out").string();
    CHECK_THROWS_AS(run_experiment(c), OutputError);
    fs::remove(blocker);
}

TEST_CASE("atomic writes replace whole files")
{
    const auto dir = scratch("atomic");
    fs::create_directories(dir);
    write_atomic((dir / "f.txt").string(), "first version, long");
    write_atomic((dir / "f.txt").string(), "second");
    CHECK(slurp(dir / "f.txt") == "second");
    std::size_t n = 0;
    for ([[maybe_unused]] const auto &e : fs::directory_iterator(dir))
        ++n;
    CHECK(n == 1);
    CHECK_THROWS_AS(write_atomic((dir / "missing" / "f.txt").string(), "x"), OutputError);
}

TEST_CASE("link-level CSV")
{
    SEResult se;
    se.snr_grid_db = {0.0, 10.0};
    se.mean_se_bps_hz = {1.0, 10.0};
    se.ci95 = {0.1, 0.0};
    se.n_draws = 5;
    const auto rows = lines(linklevel_csv(se, LinkLevelParams{}));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "snr_db,mean_se_bps_hz,ci95_bps_hz,throughput_bps");
    CHECK(rows[2] == "10.000000,10.000000,0.000000,5000000000.000000");
}
