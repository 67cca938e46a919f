#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ramanpt_app/config.hpp"

namespace ramanpt::app {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitConfig = 2,
    kExitValidation = 3,
    kExitStep = 4,
};

/// The physical configuration after applying run.lambda_override.
RamanConfig resolved_raman(const RunConfig& cfg);

/// Writes c_operators.json, z_polys.json and summary.json.
void cmd_decompose(const RunConfig& cfg, const std::filesystem::path& out);
/// Writes compare.csv (and compare.json when "json" is requested).
void cmd_compare(const RunConfig& cfg, const std::filesystem::path& out);
/// Writes sweep.csv and merges a "sweep" entry into summary.json.
void cmd_sweep(const RunConfig& cfg, const std::vector<double>& lambdas,
               const std::filesystem::path& out);

/// Parses "a,b,c"; throws ConfigError on an empty list or bad entries.
std::vector<double> parse_lambda_list(const std::string& text);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv);

} // namespace ramanpt::app
