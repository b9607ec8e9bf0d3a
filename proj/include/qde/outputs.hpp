#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qde {

// FNV-1a 64-bit, hex-encoded. Used for reproducibility checksums.
std::uint64_t fnv1a64(const std::string& data);
std::string checksum_hex(const std::string& data);

// CSV with a leading '# key: value' metadata block. Numeric cells are
// formatted with %.12g so identical inputs give identical bytes.
class CsvWriter {
public:
    void meta(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);
    const std::string& text() const { return text_; }

private:
    std::string text_;
};

std::string format_double(double v);

// Tracks emitted files; writes manifest.json with per-output checksums.
class RunManifest {
public:
    RunManifest(std::string out_dir, std::string config_hash, std::string version);
    std::string write_file(const std::string& name, const std::string& content);  // returns path
    void finalize() const;  // writes manifest.json

private:
    struct Entry {
        std::string name;
        std::string checksum;
    };
    std::string out_dir_, config_hash_, version_;
    std::vector<Entry> entries_;
};

}  // namespace qde
