#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logminor/scenario.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir,
                const std::vector<std::string>& scenario_filter, bool seed_set,
                std::uint64_t seed_override) {
    std::ifstream in(config_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config %s\n", config_path.c_str());
        return 2;
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: config is not valid JSON: %s\n", e.what());
        return 2;
    }

    logminor::ParseResult parsed = logminor::parse_config(doc);
    for (const std::string& w : parsed.warnings)
        std::fprintf(stderr, "warning: %s\n", w.c_str());
    if (!parsed.ok()) {
        for (const std::string& e : parsed.errors) std::fprintf(stderr, "error: %s\n", e.c_str());
        return 2;
    }

    logminor::RunConfig cfg = *parsed.config;
    if (seed_set) cfg.seed = seed_override;
    if (!scenario_filter.empty()) {
        std::vector<std::string> kept;
        for (const std::string& name : scenario_filter) {
            if (std::find(logminor::kScenarioNames.begin(), logminor::kScenarioNames.end(), name) ==
                logminor::kScenarioNames.end()) {
                std::fprintf(stderr, "error: --scenario: unknown scenario '%s'\n", name.c_str());
                return 2;
            }
            kept.push_back(name);
        }
        cfg.scenarios = kept;
    }

    const logminor::SuiteResult suite = logminor::run_suite(cfg);

    namespace fs = std::filesystem;
    const fs::path base = out_dir.empty() ? fs::path(cfg.output.csv_dir) : fs::path(out_dir);
    const fs::path report_path =
        out_dir.empty() ? fs::path(cfg.output.report) : base / fs::path(cfg.output.report).filename();
    const int code = logminor::emit_report(suite, report_path.string(), base.string());

    const auto& status = suite.report["overall_status"];
    std::printf("overall: %s (report: %s)\n", status.get<std::string>().c_str(),
                report_path.string().c_str());
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logminor: potential-theoretic means, variable-radius content bounds, and "
                 "entire-minorant verification on atomic measures"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> scenario_filter;
    std::uint64_t seed_override = 0;

    CLI::App* run = app.add_subcommand("run", "run the scenarios of a JSON config");
    run->add_option("config", config_path, "path to the run config (JSON)")->required();
    run->add_option("--out", out_dir, "output directory (overrides config output paths)");
    CLI::Option* seed_opt =
        run->add_option("--seed", seed_override, "seed override (replaces config seed)");
    run->add_option("--scenario", scenario_filter, "run only the named scenarios");

    CLI11_PARSE(app, argc, argv);

    return run_command(config_path, out_dir, scenario_filter, seed_opt->count() > 0,
                       seed_override);
}
