#include "ramanpt_app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ramanpt::app {

namespace {

using nlohmann::json;

// Context for diagnostics: raw text for line lookup plus the JSON path.
struct Cursor
{
    const std::string& text;
    std::string path;

    Cursor child(const std::string& key) const { return {text, path.empty() ? key : path + "." + key}; }
    Cursor item(std::size_t i) const { return {text, path + "[" + std::to_string(i) + "]"}; }
};

int line_of_offset(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

std::string locate(const std::string& text, const std::string& key)
{
    const auto pos = text.find("\"" + key + "\"");
    if (pos == std::string::npos)
        return "";
    return " (line " + std::to_string(line_of_offset(text, pos)) + ")";
}

[[noreturn]] void fail(const Cursor& at, const std::string& key, const std::string& what)
{
    const std::string field = at.path.empty() ? key : (key.empty() ? at.path : at.path + "." + key);
    std::string last = key;
    if (last.empty()) {
        last = at.path.substr(at.path.find_last_of('.') + 1);
        last = last.substr(0, last.find('['));
    }
    throw ConfigError("config error at '" + field + "'" + locate(at.text, last) + ": " + what);
}

void require_keys(const json& obj, const Cursor& at, const std::set<std::string>& required,
                  const std::set<std::string>& optional = {})
{
    if (!obj.is_object())
        fail(at, "", "expected an object");
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!required.contains(key) && !optional.contains(key))
            fail(at, key, "unknown key '" + key + "'");
    }
    for (const std::string& key : required)
        if (!obj.contains(key))
            fail(at, key, "missing required key '" + key + "'");
}

double get_number(const json& obj, const Cursor& at, const std::string& key)
{
    const json& v = obj.at(key);
    if (!v.is_number())
        fail(at, key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x))
        fail(at, key, "expected a finite number");
    return x;
}

int get_int(const json& obj, const Cursor& at, const std::string& key)
{
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        fail(at, key, "expected an integer");
    return v.get<int>();
}

std::vector<double> get_vector(const json& obj, const Cursor& at, const std::string& key)
{
    const json& v = obj.at(key);
    if (!v.is_array())
        fail(at, key, "expected an array of numbers");
    std::vector<double> out;
    for (const json& x : v) {
        if (!x.is_number())
            fail(at, key, "expected an array of numbers");
        out.push_back(x.get<double>());
    }
    return out;
}

LaserPair parse_scheme(const json& j, const Cursor& at)
{
    require_keys(j, at, {"g13_re", "g13_im", "g23_re", "g23_im", "eta13", "eta23", "detuning"});
    LaserPair p;
    p.g13 = {get_number(j, at, "g13_re"), get_number(j, at, "g13_im")};
    p.g23 = {get_number(j, at, "g23_re"), get_number(j, at, "g23_im")};
    p.eta13 = get_vector(j, at, "eta13");
    p.eta23 = get_vector(j, at, "eta23");
    p.detuning = get_number(j, at, "detuning");
    return p;
}

} // namespace

bool OutputSettings::wants(const std::string& format) const
{
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

RunConfig parse_run_config(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error (line " + std::to_string(line_of_offset(text, e.byte))
                          + "): " + e.what());
    }
    const Cursor root{text, ""};
    require_keys(doc, root, {"space", "ion", "schemes", "run", "output"});

    RunConfig cfg;

    const Cursor sp = root.child("space");
    const json& space = doc.at("space");
    require_keys(space, sp, {"modes", "fock_cutoff", "buffer", "n_phys"});
    cfg.raman.space = SpaceSpec{.atomic_dim = 3,
                                .mode_count = get_int(space, sp, "modes"),
                                .fock_cutoff = get_int(space, sp, "fock_cutoff"),
                                .buffer = get_int(space, sp, "buffer")};
    cfg.n_phys = get_int(space, sp, "n_phys");
    if (cfg.raman.space.mode_count < 0 || cfg.raman.space.fock_cutoff < 1 || cfg.raman.space.buffer < 0)
        fail(sp, "", "modes >= 0, fock_cutoff >= 1 and buffer >= 0 are required");
    if (cfg.n_phys < 0 || cfg.n_phys > cfg.raman.space.fock_cutoff)
        fail(sp, "n_phys", "n_phys must lie in [0, fock_cutoff]");

    const Cursor io = root.child("ion");
    const json& ion = doc.at("ion");
    require_keys(ion, io, {"omega1", "omega2", "omega3", "nu"});
    cfg.raman.omega1 = get_number(ion, io, "omega1");
    cfg.raman.omega2 = get_number(ion, io, "omega2");
    cfg.raman.omega3 = get_number(ion, io, "omega3");
    cfg.raman.trap_freq = get_number(ion, io, "nu");

    const Cursor sc = root.child("schemes");
    const json& schemes = doc.at("schemes");
    if (!schemes.is_array() || schemes.empty())
        fail(root, "schemes", "expected a non-empty array");
    for (std::size_t i = 0; i < schemes.size(); ++i)
        cfg.raman.schemes.push_back(parse_scheme(schemes[i], sc.item(i)));

    const Cursor rn = root.child("run");
    const json& run = doc.at("run");
    require_keys(run, rn, {"t_final", "dt", "samples"}, {"lambda_override"});
    cfg.run.t_final = get_number(run, rn, "t_final");
    cfg.run.dt = get_number(run, rn, "dt");
    cfg.run.samples = get_int(run, rn, "samples");
    if (cfg.run.t_final < 0.0)
        fail(rn, "t_final", "must be non-negative");
    if (!(cfg.run.dt > 0.0))
        fail(rn, "dt", "must be positive");
    if (cfg.run.samples < 1)
        fail(rn, "samples", "must be at least 1");
    if (run.contains("lambda_override")) {
        const double l = get_number(run, rn, "lambda_override");
        if (l == 0.0)
            fail(rn, "lambda_override", "must be nonzero");
        cfg.run.lambda_override = l;
    }

    const Cursor ou = root.child("output");
    const json& output = doc.at("output");
    require_keys(output, ou, {"directory", "formats"});
    if (!output.at("directory").is_string())
        fail(ou, "directory", "expected a string");
    cfg.output.directory = output.at("directory").get<std::string>();
    const json& formats = output.at("formats");
    if (!formats.is_array())
        fail(ou, "formats", "expected an array of strings");
    cfg.output.formats.clear();
    for (const json& f : formats) {
        if (!f.is_string() || (f != "csv" && f != "json"))
            fail(ou, "formats", "entries must be \"csv\" or \"json\"");
        cfg.output.formats.push_back(f.get<std::string>());
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

RamanConfig with_lambda(const RamanConfig& cfg, double lambda)
{
    validate_config(cfg);
    const double scale = std::abs(perturbative_parameter(cfg)) / std::abs(lambda);
    RamanConfig out = cfg;
    for (LaserPair& p : out.schemes)
        p.detuning *= scale;
    return out;
}

std::vector<double> sample_times(const RunSettings& run)
{
    if (run.samples == 1)
        return {run.t_final};
    std::vector<double> t(static_cast<std::size_t>(run.samples));
    for (int i = 0; i < run.samples; ++i)
        t[static_cast<std::size_t>(i)] = run.t_final * i / (run.samples - 1);
    return t;
}

} // namespace ramanpt::app
