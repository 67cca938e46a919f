#include "ramanpt_app/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ramanpt::app {

std::string format_double(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("refusing to emit a non-finite number");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out)
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc)
{
    write_file_atomic(path, doc.dump(2) + "\n");
}

void write_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows)
{
    std::string text;
    for (std::size_t i = 0; i < header.size(); ++i)
        text += (i ? "," : "") + header[i];
    text += "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::logic_error("CSV row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i)
            text += (i ? "," : "") + format_double(row[i]);
        text += "\n";
    }
    write_file_atomic(path, text);
}

} // namespace ramanpt::app
