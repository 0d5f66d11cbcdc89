// SPDX-License-Identifier: Apache-2.0
//
// muran: command-line driver for the mmWave mesh energy experiments.
//
//   muran run --config <path> --out <dir> [--seed N] [--policies a,b]
//             [--hours list] [--linklevel] [--threads N]
//   muran validate --config <path>
//   muran version
//
// Log verbosity comes from MURAN_LOG_LEVEL (trace, debug, info, warn, error,
// critical, off). Logs go to stderr.

#include "muran/config.hpp"
#include "muran/runner.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

void setup_logging()
{
    auto logger = spdlog::stderr_logger_mt("muran");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char *env = std::getenv("MURAN_LOG_LEVEL"))
        spdlog::set_level(spdlog::level::from_str(env));
}

void print_diagnostics(const std::vector<muran::Diagnostic> &diags)
{
    for (const auto &d : diags)
        std::cerr << (d.key.empty() ? "config" : d.key) << ": " << d.message << "\n";
}

struct Loaded
{
    json doc;
    std::string base_dir;
};

// Throws ConfigFileError if unreadable; a parse failure yields a diagnostic.
std::optional<Loaded> read_document(const std::string &path, std::vector<muran::Diagnostic> &diags)
{
    std::ifstream f(path);
    if (!f)
        throw muran::ConfigFileError(fmt::format("cannot read configuration file '{}'", path));
    std::stringstream ss;
    ss << f.rdbuf();
    Loaded l;
    l.doc = json::parse(ss.str(), nullptr, false);
    if (l.doc.is_discarded())
    {
        diags.push_back({"", "invalid JSON"});
        return std::nullopt;
    }
    const auto base = std::filesystem::path(path).parent_path();
    l.base_dir = base.empty() ? "." : base.string();
    return l;
}

std::vector<std::string> split(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

// Hours accept single values and inclusive ranges: "3,15" or "0-23".
bool parse_hours(const std::string &text, json &out)
{
    out = json::array();
    for (const std::string &item : split(text))
    {
        int lo = 0;
        int hi = 0;
        char dash = 0;
        std::istringstream is(item);
        if (!(is >> lo))
            return false;
        hi = lo;
        if (is >> dash)
        {
            if (dash != '-' || !(is >> hi) || hi < lo)
                return false;
        }
        if (!is.eof() && !(is >> std::ws).eof())
            return false;
        for (int h = lo; h <= hi; ++h)
            out.push_back(h);
    }
    return !out.empty();
}

} // namespace

int main(int argc, char **argv)
{
    setup_logging();

    CLI::App app{"mmWave mesh backhaul traffic and energy management simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::string policies;
    std::string hours;
    bool linklevel = false;
    std::optional<int> threads;

    auto *run = app.add_subcommand("run", "Run the hour x policy experiment and write artifacts");
    run->add_option("--config", config_path, "Configuration JSON")->required();
    run->add_option("--out", out_dir, "Output directory")->required();
    run->add_option("--seed", seed, "Master seed (overrides the config)");
    run->add_option("--policies", policies, "Comma-separated policy names");
    run->add_option("--hours", hours, "Comma-separated hours or ranges, e.g. 3,15 or 0-23");
    run->add_flag("--linklevel", linklevel, "Also run the link-level SE sweep");
    run->add_option("--threads", threads, "Worker threads");

    auto *validate = app.add_subcommand("validate", "Check a configuration and list problems");
    validate->add_option("--config", config_path, "Configuration JSON")->required();

    app.add_subcommand("version", "Print the tool version");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        return app.exit(e) == 0 ? muran::kExitOk : muran::kExitInvalidConfig;
    }

    if (app.got_subcommand("version"))
    {
        std::cout << "muran " << muran::kToolVersion << "\n";
        return muran::kExitOk;
    }

    try
    {
        std::vector<muran::Diagnostic> diags;
        auto loaded = read_document(config_path, diags);
        if (!loaded)
        {
            print_diagnostics(diags);
            return muran::kExitInvalidConfig;
        }

        if (run->parsed())
        {
            json &doc = loaded->doc;
            if (doc.is_object())
            {
                if (seed)
                    doc["seed"] = *seed;
                if (threads)
                    doc["threads"] = *threads;
                if (!policies.empty())
                {
                    json list = json::array();
                    for (const auto &p : split(policies))
                        list.push_back(p);
                    doc["policies"] = list;
                }
                if (!hours.empty())
                {
                    json list;
                    if (parse_hours(hours, list))
                        doc["hours"] = list;
                    else
                        diags.push_back({"hours", fmt::format("cannot parse '{}'", hours)});
                }
                if (linklevel)
                {
                    if (!doc.contains("linklevel") || !doc["linklevel"].is_object())
                        doc["linklevel"] = json::object();
                    doc["linklevel"]["enabled"] = true;
                }
            }
        }

        muran::ConfigLoad load = muran::parse_config(loaded->doc, loaded->base_dir);
        diags.insert(diags.end(), load.diagnostics.begin(), load.diagnostics.end());
        if (!diags.empty())
        {
            print_diagnostics(diags);
            return muran::kExitInvalidConfig;
        }
        if (validate->parsed())
        {
            std::cout << "ok\n";
            return muran::kExitOk;
        }

        muran::ExperimentConfig config = std::move(*load.config);
        config.output_dir = out_dir;
        const muran::RunManifest m = muran::run_experiment(config);
        std::cout << fmt::format("wrote {} outputs to {} in {:.2f} s (config {})\n", m.outputs.size() + 1, out_dir,
                                 m.timings_s.at("total"), m.config_hash.substr(0, 12));
        return muran::kExitOk;
    }
    catch (const muran::ConfigFileError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return muran::kExitConfigUnreadable;
    }
    catch (const muran::OutputError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return muran::kExitOutputUnwritable;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return muran::kExitFailure;
    }
}
