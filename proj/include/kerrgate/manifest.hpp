#ifndef KERRGATE_MANIFEST_HPP
#define KERRGATE_MANIFEST_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace kerrgate {

inline constexpr const char* kVersion = "0.1.0";

// Full record of one CLI invocation: resolved parameters, numerical
// settings and output paths. Re-running from a manifest reproduces the
// outputs byte for byte.
struct RunManifest {
    std::string command;
    nlohmann::json params;  // resolved parameter set, kappa_o units
    std::string version = kVersion;
    std::string out_path;       // CSV destination, empty if stdout only
    std::string manifest_path;  // where this manifest was written

    nlohmann::json to_json() const;
    static RunManifest from_json(const nlohmann::json& j);
    void save(const std::string& path) const;
    static RunManifest load(const std::string& path);
};

// CSV emission with a fixed "%.12g" cell format so identical data gives
// identical bytes.
std::string format_csv_cell(double v);

struct CsvTable {
    std::vector<std::string> header;  // column names, units spelled out
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
    void write(const std::string& path) const;
};

}  // namespace kerrgate

#endif
