#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace ramanpt::app {

/// x with 17 significant digits (round-trips exactly). Throws on non-finite x.
std::string format_double(double x);

/// Writes via a temporary file and a rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Indented, sorted-key JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

/// Header row plus one row per entry; every value formatted with format_double.
void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

} // namespace ramanpt::app
