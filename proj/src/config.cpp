#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "logminor/rng.hpp"
#include "logminor/scenario.hpp"

namespace logminor {

const std::vector<std::string> kScenarioNames = {"means",    "theorem1",     "theorem2",
                                                 "minorant", "degeneration", "besicovitch"};

namespace {

using nlohmann::json;

void warn_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix,
                  std::vector<std::string>& warnings) {
    for (const auto& [key, value] : obj.items())
        if (!known.contains(key)) warnings.push_back("unknown key: " + prefix + key);
}

bool get_number(const json& obj, const char* key, double& out, const std::string& prefix,
                std::vector<std::string>& errors) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number()) {
        errors.push_back(prefix + key + ": must be a number");
        return false;
    }
    out = obj[key].get<double>();
    return true;
}

bool get_int(const json& obj, const char* key, int& out, const std::string& prefix,
             std::vector<std::string>& errors) {
    if (!obj.contains(key)) return false;
    if (!obj[key].is_number_integer()) {
        errors.push_back(prefix + key + ": must be an integer");
        return false;
    }
    out = obj[key].get<int>();
    return true;
}

void parse_measure(const json& m, RunConfig& cfg, std::vector<std::string>& errors,
                   std::vector<std::string>& warnings) {
    if (!m.is_object()) {
        errors.push_back("measure: must be an object");
        return;
    }
    warn_unknown(m, {"atoms", "generator"}, "measure.", warnings);
    if (m.contains("atoms")) {
        if (!m["atoms"].is_array()) {
            errors.push_back("measure.atoms: must be an array of [re, im, mass] triples");
        } else {
            std::size_t idx = 0;
            for (const auto& entry : m["atoms"]) {
                const std::string path = "measure.atoms[" + std::to_string(idx++) + "]";
                if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number() ||
                    !entry[1].is_number() || !entry[2].is_number()) {
                    errors.push_back(path + ": must be a [re, im, mass] number triple");
                    continue;
                }
                const double re = entry[0].get<double>();
                const double im = entry[1].get<double>();
                const double mass = entry[2].get<double>();
                if (!std::isfinite(re) || !std::isfinite(im) || !(mass > 0.0) || !std::isfinite(mass)) {
                    errors.push_back(path + ": coordinates must be finite and mass positive");
                    continue;
                }
                cfg.measure.atoms.push_back(Atom{PlanePoint(re, im), mass});
            }
        }
    }
    if (m.contains("generator")) {
        const json& g = m["generator"];
        if (!g.is_object()) {
            errors.push_back("measure.generator: must be an object");
            return;
        }
        warn_unknown(g, {"kind", "exponent", "count", "mass_law", "mass_min", "mass_max"},
                     "measure.generator.", warnings);
        GeneratorSpec spec;
        std::string kind = "radial_power";
        if (g.contains("kind")) {
            if (!g["kind"].is_string())
                errors.push_back("measure.generator.kind: must be a string");
            else
                kind = g["kind"].get<std::string>();
        }
        if (kind != "radial_power")
            errors.push_back("measure.generator.kind: unsupported kind '" + kind +
                             "' (expected radial_power)");
        get_number(g, "exponent", spec.exponent, "measure.generator.", errors);
        get_int(g, "count", spec.count, "measure.generator.", errors);
        if (spec.count < 0) errors.push_back("measure.generator.count: must be nonnegative");
        if (g.contains("mass_law")) {
            if (!g["mass_law"].is_string())
                errors.push_back("measure.generator.mass_law: must be a string");
            else
                spec.mass_law = g["mass_law"].get<std::string>();
        }
        if (spec.mass_law != "unit" && spec.mass_law != "uniform")
            errors.push_back("measure.generator.mass_law: must be 'unit' or 'uniform'");
        get_number(g, "mass_min", spec.mass_min, "measure.generator.", errors);
        get_number(g, "mass_max", spec.mass_max, "measure.generator.", errors);
        if (!(spec.mass_min > 0.0) || !(spec.mass_max >= spec.mass_min))
            errors.push_back("measure.generator: requires 0 < mass_min <= mass_max");
        cfg.measure.generator = spec;
    }
}

void parse_radius(const json& r, RunConfig& cfg, std::vector<std::string>& errors,
                  std::vector<std::string>& warnings) {
    if (!r.is_object()) {
        errors.push_back("radius_fn: must be an object");
        return;
    }
    warn_unknown(r, {"kappa", "q", "tabulated"}, "radius_fn.", warnings);
    if (r.contains("tabulated")) {
        if (!r["tabulated"].is_string())
            errors.push_back("radius_fn.tabulated: must be a file path string");
        else
            cfg.radius.tabulated_path = r["tabulated"].get<std::string>();
        return;
    }
    get_number(r, "kappa", cfg.radius.kappa, "radius_fn.", errors);
    get_number(r, "q", cfg.radius.q, "radius_fn.", errors);
    if (!(cfg.radius.kappa > 0.0) || !std::isfinite(cfg.radius.kappa))
        errors.push_back("radius_fn.kappa: must be positive and finite");
    if (!(cfg.radius.q >= 0.0) || !std::isfinite(cfg.radius.q))
        errors.push_back("radius_fn.q: must be nonnegative and finite");
}

}  // namespace

ParseResult parse_config(const nlohmann::json& doc) {
    ParseResult res;
    RunConfig cfg;
    auto& errors = res.errors;

    if (!doc.is_object()) {
        errors.push_back("config: root must be a JSON object");
        return res;
    }
    warn_unknown(doc,
                 {"measure", "radius_fn", "c0", "d", "l", "grid", "scenarios", "seed", "trials",
                  "output"},
                 "", res.warnings);

    if (doc.contains("measure")) parse_measure(doc["measure"], cfg, errors, res.warnings);
    if (doc.contains("radius_fn")) parse_radius(doc["radius_fn"], cfg, errors, res.warnings);

    get_number(doc, "c0", cfg.c0, "", errors);
    if (!std::isfinite(cfg.c0)) errors.push_back("c0: must be finite");
    get_number(doc, "d", cfg.d, "", errors);
    get_number(doc, "l", cfg.l, "", errors);
    if (!(cfg.d > 0.0) || !std::isfinite(cfg.d)) errors.push_back("d: must be positive and finite");
    if (!(cfg.l >= 0.0) || !std::isfinite(cfg.l)) errors.push_back("l: must be nonnegative and finite");

    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        if (!g.is_object()) {
            errors.push_back("grid: must be an object");
        } else {
            warn_unknown(g, {"xmin", "xmax", "ymin", "ymax", "nx", "ny"}, "grid.", res.warnings);
            get_number(g, "xmin", cfg.grid.xmin, "grid.", errors);
            get_number(g, "xmax", cfg.grid.xmax, "grid.", errors);
            get_number(g, "ymin", cfg.grid.ymin, "grid.", errors);
            get_number(g, "ymax", cfg.grid.ymax, "grid.", errors);
            get_int(g, "nx", cfg.grid.nx, "grid.", errors);
            get_int(g, "ny", cfg.grid.ny, "grid.", errors);
            if (!(cfg.grid.xmax >= cfg.grid.xmin) || !(cfg.grid.ymax >= cfg.grid.ymin))
                errors.push_back("grid: requires xmin <= xmax and ymin <= ymax");
            if (cfg.grid.nx < 1 || cfg.grid.ny < 1)
                errors.push_back("grid: nx and ny must be at least 1");
            else if (static_cast<long long>(cfg.grid.nx) * cfg.grid.ny > 1000000)
                errors.push_back("grid: nx*ny must not exceed 10^6");
        }
    }

    if (doc.contains("scenarios")) {
        if (!doc["scenarios"].is_array()) {
            errors.push_back("scenarios: must be an array of names");
        } else {
            cfg.scenarios.clear();
            for (const auto& s : doc["scenarios"]) {
                if (!s.is_string()) {
                    errors.push_back("scenarios: entries must be strings");
                    continue;
                }
                const std::string name = s.get<std::string>();
                if (std::find(kScenarioNames.begin(), kScenarioNames.end(), name) ==
                    kScenarioNames.end())
                    errors.push_back("scenarios: unknown scenario '" + name + "'");
                else
                    cfg.scenarios.push_back(name);
            }
            if (cfg.scenarios.empty()) errors.push_back("scenarios: at least one scenario required");
        }
    }

    // d beyond 2 only makes sense for the degeneration flow (every other
    // scenario runs the theorems, which live on d in (0, 2]).
    if (cfg.d > 2.0)
        for (const std::string& s : cfg.scenarios)
            if (s != "degeneration")
                errors.push_back("d: must lie in (0, 2] for scenario '" + s + "' (got " +
                                 std::to_string(cfg.d) + ")");

    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_integer())
            errors.push_back("seed: must be an integer");
        else
            cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    get_int(doc, "trials", cfg.trials, "", errors);
    if (cfg.trials < 1 || cfg.trials > 1000) errors.push_back("trials: must lie in [1, 1000]");

    if (doc.contains("output")) {
        const json& o = doc["output"];
        if (!o.is_object()) {
            errors.push_back("output: must be an object");
        } else {
            warn_unknown(o, {"report", "csv_dir"}, "output.", res.warnings);
            if (o.contains("report")) {
                if (!o["report"].is_string())
                    errors.push_back("output.report: must be a string");
                else
                    cfg.output.report = o["report"].get<std::string>();
            }
            if (o.contains("csv_dir")) {
                if (!o["csv_dir"].is_string())
                    errors.push_back("output.csv_dir: must be a string");
                else
                    cfg.output.csv_dir = o["csv_dir"].get<std::string>();
            }
        }
    }

    if (errors.empty()) res.config = std::move(cfg);
    return res;
}

nlohmann::json config_to_json(const RunConfig& cfg) {
    nlohmann::json doc;
    nlohmann::json atoms = nlohmann::json::array();
    for (const Atom& a : cfg.measure.atoms)
        atoms.push_back({a.center.real(), a.center.imag(), a.mass});
    doc["measure"]["atoms"] = atoms;
    if (cfg.measure.generator) {
        const GeneratorSpec& g = *cfg.measure.generator;
        doc["measure"]["generator"] = {{"kind", "radial_power"},   {"exponent", g.exponent},
                                       {"count", g.count},         {"mass_law", g.mass_law},
                                       {"mass_min", g.mass_min},   {"mass_max", g.mass_max}};
    }
    if (cfg.radius.tabulated_path.empty())
        doc["radius_fn"] = {{"kappa", cfg.radius.kappa}, {"q", cfg.radius.q}};
    else
        doc["radius_fn"] = {{"tabulated", cfg.radius.tabulated_path}};
    doc["c0"] = cfg.c0;
    doc["d"] = cfg.d;
    doc["l"] = cfg.l;
    doc["grid"] = {{"xmin", cfg.grid.xmin}, {"xmax", cfg.grid.xmax}, {"ymin", cfg.grid.ymin},
                   {"ymax", cfg.grid.ymax}, {"nx", cfg.grid.nx},     {"ny", cfg.grid.ny}};
    doc["scenarios"] = cfg.scenarios;
    doc["seed"] = cfg.seed;
    doc["trials"] = cfg.trials;
    doc["output"] = {{"report", cfg.output.report}, {"csv_dir", cfg.output.csv_dir}};
    return doc;
}

AtomicMassDistribution materialize_measure(const MeasureSpec& spec, std::uint64_t seed) {
    std::vector<Atom> atoms = spec.atoms;
    if (spec.generator) {
        const GeneratorSpec& g = *spec.generator;
        Rng rng = Rng::substream(seed, 0xA70);
        const double golden = 0.6180339887498949;
        for (int k = 1; k <= g.count; ++k) {
            const double radius = std::pow(static_cast<double>(k), g.exponent);
            const double angle = 2.0 * M_PI * std::fmod(k * golden, 1.0);
            const double mass =
                (g.mass_law == "unit") ? 1.0 : rng.uniform(g.mass_min, g.mass_max);
            atoms.push_back(Atom{PlanePoint(radius * std::cos(angle), radius * std::sin(angle)), mass});
        }
    }
    return AtomicMassDistribution(std::move(atoms));
}

RadiusFunction make_radius(const RadiusSpec& spec) {
    if (spec.tabulated_path.empty()) return RadiusFunction::parametric(spec.kappa, spec.q);

    std::ifstream in(spec.tabulated_path);
    if (!in) throw std::runtime_error("make_radius: cannot open " + spec.tabulated_path);
    nlohmann::json doc = nlohmann::json::parse(in);

    GridSpec grid;
    const nlohmann::json& g = doc.at("grid");
    grid.xmin = g.at("xmin").get<double>();
    grid.xmax = g.at("xmax").get<double>();
    grid.ymin = g.at("ymin").get<double>();
    grid.ymax = g.at("ymax").get<double>();
    grid.nx = g.at("nx").get<int>();
    grid.ny = g.at("ny").get<int>();
    std::vector<double> values = doc.at("values").get<std::vector<double>>();

    if (doc.contains("envelope")) {
        RadiusFunction::TabulatedGrid tab;
        tab.grid = grid;
        tab.values = std::move(values);
        tab.env_c = doc["envelope"].at("c").get<double>();
        tab.env_R = doc["envelope"].at("R").get<double>();
        tab.env_P = doc["envelope"].at("P").get<double>();
        return RadiusFunction::tabulated(std::move(tab));
    }
    return RadiusFunction::tabulated_autofit(grid, std::move(values));
}

}  // namespace logminor
