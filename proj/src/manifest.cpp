#include "kerrgate/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace kerrgate {

nlohmann::json RunManifest::to_json() const {
    return {{"command", command},
            {"params", params},
            {"version", version},
            {"out_path", out_path},
            {"manifest_path", manifest_path}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.params = j.at("params");
    m.version = j.value("version", std::string(kVersion));
    m.out_path = j.value("out_path", std::string());
    m.manifest_path = j.value("manifest_path", std::string());
    return m;
}

void RunManifest::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << to_json().dump(2) << "\n";
}

RunManifest RunManifest::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read manifest: " + path);
    return from_json(nlohmann::json::parse(in));
}

std::string format_csv_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string CsvTable::to_string() const {
    std::string out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV: " + path);
    out << to_string();
}

}  // namespace kerrgate
