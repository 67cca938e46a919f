#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <ramanpt/raman.hpp>

namespace ramanpt::app {

/// Malformed or schema-violating configuration document (exit code 2).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct RunSettings
{
    double t_final = 0.0;
    double dt = 0.0;
    int samples = 2; ///< evenly spaced sample count, endpoints included
    std::optional<double> lambda_override;
};

struct OutputSettings
{
    std::filesystem::path directory = ".";
    std::vector<std::string> formats{"csv"};

    bool wants(const std::string& format) const;
};

struct RunConfig
{
    RamanConfig raman;
    int n_phys = 10;
    RunSettings run;
    OutputSettings output;
};

/// Parses and schema-checks a JSON document. Unknown keys, missing keys and
/// wrongly typed values throw ConfigError naming the field and, where it can
/// be located, the line. Physics validation is left to the library.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Copy of `cfg` with every detuning scaled so the perturbative parameter
/// becomes `lambda`; strengths and trap frequency stay fixed.
RamanConfig with_lambda(const RamanConfig& cfg, double lambda);

/// Sample times 0, t_final/(n-1), ..., t_final.
std::vector<double> sample_times(const RunSettings& run);

} // namespace ramanpt::app
