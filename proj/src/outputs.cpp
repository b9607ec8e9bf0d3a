#include "qde/outputs.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qde/errors.hpp"
#include "qde/vendor_json.hpp"

namespace qde {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string checksum_hex(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    text_ += "# " + key + ": " + value + "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        text_ += (i ? "," : "") + columns[i];
    text_ += "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        text_ += (i ? "," : "") + format_double(values[i]);
    text_ += "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
        text_ += (i ? "," : "") + cells[i];
    text_ += "\n";
}

RunManifest::RunManifest(std::string out_dir, std::string config_hash, std::string version)
    : out_dir_(std::move(out_dir)), config_hash_(std::move(config_hash)),
      version_(std::move(version)) {
    std::filesystem::create_directories(out_dir_);
}

std::string RunManifest::write_file(const std::string& name, const std::string& content) {
    const std::string path = out_dir_ + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    entries_.push_back({name, checksum_hex(content)});
    return path;
}

void RunManifest::finalize() const {
    nlohmann::json j;
    j["config_hash"] = config_hash_;
    j["version"] = version_;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["timestamp"] = stamp;
    j["outputs"] = nlohmann::json::array();
    for (const auto& e : entries_)
        j["outputs"].push_back({{"file", e.name}, {"checksum", e.checksum}});
    std::ofstream out(out_dir_ + "/manifest.json", std::ios::binary);
    out << j.dump(2) << "\n";
}

}  // namespace qde
