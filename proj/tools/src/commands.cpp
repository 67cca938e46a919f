#include "ramanpt_app/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramanpt_app/experiments.hpp"
#include "ramanpt_app/output.hpp"

namespace ramanpt::app {

namespace {

using nlohmann::json;

json effective_model_json(const EffectiveModel& m)
{
    json schemes = json::array();
    for (const EffectiveCoupling& c : m.couplings)
        schemes.push_back({{"g12_re", c.g12.real()},
                           {"g12_im", c.g12.imag()},
                           {"eta12", c.eta12},
                           {"omega12", c.omega12}});
    return {{"stark_shifts", {{"omega1", m.shift1}, {"omega2", m.shift2}, {"omega3", m.shift3}}},
            {"couplings", schemes}};
}

void write_table(const RunConfig& cfg, const std::filesystem::path& out, const std::string& stem,
                 const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows)
{
    if (cfg.output.wants("csv"))
        write_csv(out / (stem + ".csv"), header, rows);
    if (cfg.output.wants("json")) {
        json columns = json::object();
        for (std::size_t c = 0; c < header.size(); ++c) {
            json col = json::array();
            for (const auto& row : rows)
                col.push_back(row[c]);
            columns[header[c]] = std::move(col);
        }
        write_json(out / (stem + ".json"), columns);
    }
}

} // namespace

RamanConfig resolved_raman(const RunConfig& cfg)
{
    if (cfg.run.lambda_override)
        return with_lambda(cfg.raman, *cfg.run.lambda_override);
    return cfg.raman;
}

void cmd_decompose(const RunConfig& cfg, const std::filesystem::path& out)
{
    const RamanConfig raman = resolved_raman(cfg);
    const HamiltonianOrders orders = build_interaction_orders(raman);
    const PerturbativeDecomposition d = compute_cz_orders(orders, 2);
    const EffectiveModel model = analytic_effective_model(raman);

    json c_ops = {{"space", space_to_json(raman.space)},
                  {"lambda", d.lambda()},
                  {"frequency_unit", orders.frequency_unit},
                  {"C1", operator_to_json(d.c()[0])},
                  {"C2", operator_to_json(d.c()[1])}};
    json z_polys = {{"lambda", d.lambda()}, {"Z1", tp_to_json(d.z()[0])}, {"Z2", tp_to_json(d.z()[1])}};

    const double l2 = d.lambda() * d.lambda();
    json detunings = json::array();
    for (const LaserPair& p : raman.schemes)
        detunings.push_back(p.detuning);
    std::vector<std::string> warnings = config_warnings(raman);
    warnings.insert(warnings.end(), d.warnings().begin(), d.warnings().end());

    json summary = effective_model_json(model);
    summary["lambda"] = d.lambda();
    summary["coupling_scale"] = coupling_scale(raman);
    summary["reference_detuning"] = reference_detuning(raman);
    summary["detunings"] = detunings;
    summary["engine_vs_analytic_interior_distance"]
        = interior_distance(d.c()[1] * l2, effective_c2_operator(model, raman), cfg.n_phys);
    summary["warnings"] = warnings;

    write_json(out / "c_operators.json", c_ops);
    write_json(out / "z_polys.json", z_polys);
    write_json(out / "summary.json", summary);
}

void cmd_compare(const RunConfig& cfg, const std::filesystem::path& out)
{
    const RamanConfig raman = resolved_raman(cfg);
    const std::vector<double> samples = sample_times(cfg.run);
    const std::vector<CompareRow> rows = compare_trajectories(raman, samples, cfg.run.dt, cfg.n_phys);

    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const CompareRow& r : rows)
        table.push_back({r.t, r.fid_exact_vs_dressed, r.fid_exact_vs_effective, r.p1, r.p2, r.p3,
                         r.p1_eff, r.p2_eff});
    write_table(cfg, out, "compare",
                {"t", "fid_exact_vs_dressed", "fid_exact_vs_effective", "P1", "P2", "P3", "P1_eff",
                 "P2_eff"},
                table);
}

void cmd_sweep(const RunConfig& cfg, const std::vector<double>& lambdas,
               const std::filesystem::path& out)
{
    if (lambdas.empty())
        throw ConfigError("the lambda list is empty");
    const RamanConfig raman = resolved_raman(cfg);
    validate_config(raman);
    const double step = cfg.run.dt * std::abs(reference_detuning(raman));

    std::vector<double> errors;
    std::vector<std::vector<double>> table;
    for (double lambda : lambdas) {
        errors.push_back(sweep_error(raman, lambda, step, cfg.n_phys));
        table.push_back({lambda, errors.back()});
    }
    write_table(cfg, out, "sweep", {"lambda", "interior_error"}, table);

    json summary = json::object();
    const std::filesystem::path summary_path = out / "summary.json";
    if (std::filesystem::exists(summary_path)) {
        std::ifstream in(summary_path);
        summary = json::parse(in, nullptr, false);
        if (summary.is_discarded() || !summary.is_object())
            summary = json::object();
    }
    json sweep = {{"lambdas", lambdas}, {"interior_error", errors}, {"dimensionless_time", 20.0}};
    if (const auto slope = loglog_slope(lambdas, errors))
        sweep["slope"] = *slope;
    summary["sweep"] = sweep;
    write_json(summary_path, summary);
}

std::vector<double> parse_lambda_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw ConfigError("--lambdas: empty entry in '" + text + "'");
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(item.substr(first), &used);
        } catch (const std::exception&) {
            throw ConfigError("--lambdas: '" + item + "' is not a number");
        }
        if (item.find_first_not_of(" \t", first + used) != std::string::npos)
            throw ConfigError("--lambdas: '" + item + "' is not a number");
        if (!(x > 0.0) || !std::isfinite(x))
            throw ConfigError("--lambdas: values must be positive and finite");
        out.push_back(x);
    }
    if (out.empty())
        throw ConfigError("--lambdas: the lambda list is empty");
    return out;
}

int run(int argc, const char* const* argv)
{
    CLI::App cli{"Gauge-fixed perturbative decomposition and exact propagation for trapped-ion Raman schemes"};
    cli.require_subcommand(1);
    std::string config_path;
    std::string out_dir;
    std::string lambdas_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON run configuration")->required();
        sub->add_option("--out", out_dir, "output directory (overrides output.directory)");
    };
    CLI::App* decompose = cli.add_subcommand("decompose", "write C_n, Z_n and a summary");
    CLI::App* compare = cli.add_subcommand("compare", "exact vs dressed vs effective evolution");
    CLI::App* sweep = cli.add_subcommand("sweep", "order-scaling study over lambda");
    add_common(decompose);
    add_common(compare);
    add_common(sweep);
    sweep->add_option("--lambdas", lambdas_text, "comma-separated lambda values")->required();

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = cli.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const RunConfig cfg = load_run_config(config_path);
        const std::filesystem::path out = out_dir.empty() ? cfg.output.directory : std::filesystem::path(out_dir);
        if (decompose->parsed())
            cmd_decompose(cfg, out);
        else if (compare->parsed())
            cmd_compare(cfg, out);
        else
            cmd_sweep(cfg, parse_lambda_list(lambdas_text), out);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const NearResonance& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const std::string& k : e.keys())
            std::cerr << "  near-resonant key: " << k << "\n";
        return kExitValidation;
    } catch (const StepTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitStep;
    } catch (const DuplicateDetuning& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidScheme& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidIndex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidHamiltonian& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace ramanpt::app
