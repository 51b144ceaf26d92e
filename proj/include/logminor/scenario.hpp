#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logminor/measure.hpp"
#include "logminor/radius.hpp"

namespace logminor {

/// Synthetic measure generator: atoms at |a_k| = k^exponent for k = 1..count
/// on a deterministic golden-angle spiral, masses per mass_law.
struct GeneratorSpec {
    double exponent = 1.0;
    int count = 0;
    std::string mass_law = "unit";  // "unit" | "uniform"
    double mass_min = 0.5;
    double mass_max = 3.0;

    bool operator==(const GeneratorSpec&) const = default;
};

struct MeasureSpec {
    std::vector<Atom> atoms;
    std::optional<GeneratorSpec> generator;

    bool operator==(const MeasureSpec&) const = default;
};

struct RadiusSpec {
    double kappa = 1.0;
    double q = 0.0;
    std::string tabulated_path;  // empty = parametric form

    bool operator==(const RadiusSpec&) const = default;
};

struct OutputSpec {
    std::string report = "report.json";
    std::string csv_dir = ".";

    bool operator==(const OutputSpec&) const = default;
};

struct RunConfig {
    MeasureSpec measure;
    RadiusSpec radius;
    double c0 = 0.0;
    double d = 1.0;
    double l = 1.0;
    GridSpec grid{};
    std::vector<std::string> scenarios{"means"};
    std::uint64_t seed = 1;
    int trials = 100;
    OutputSpec output;

    bool operator==(const RunConfig&) const = default;
};

extern const std::vector<std::string> kScenarioNames;

struct ParseResult {
    std::optional<RunConfig> config;
    std::vector<std::string> errors;    // every violated constraint, with key path
    std::vector<std::string> warnings;  // unknown keys

    bool ok() const { return config.has_value(); }
};

ParseResult parse_config(const nlohmann::json& doc);

/// Canonical serialization; parse_config(config_to_json(cfg)) == cfg.
nlohmann::json config_to_json(const RunConfig& cfg);

AtomicMassDistribution materialize_measure(const MeasureSpec& spec, std::uint64_t seed);

/// Builds the configured radius function: the parametric form, or a
/// tabulated grid loaded from a JSON file ({"grid": {...}, "values": [...],
/// "envelope": {"c","R","P"}?}; without an envelope the constants are
/// auto-fitted).
RadiusFunction make_radius(const RadiusSpec& spec);

struct SuiteResult {
    nlohmann::ordered_json report;
    std::map<std::string, std::string> csv_files;  // filename -> contents
    std::map<std::string, double> timings_ms;      // volatile; kept out of the report
    bool all_pass = false;
    bool had_error = false;

    int exit_code() const { return had_error ? 2 : (all_pass ? 0 : 1); }
};

/// Runs every configured scenario; identical config + seed produce a
/// byte-identical report (timings live in the volatile sidecar only).
SuiteResult run_suite(const RunConfig& cfg);

/// Writes the report, the per-grid CSVs, and the timing sidecar. Returns the
/// process exit code: 0 all pass, 1 any fail, 2 config error or unwritable
/// output.
int emit_report(const SuiteResult& suite, const std::string& report_path,
                const std::string& csv_dir);

}  // namespace logminor
