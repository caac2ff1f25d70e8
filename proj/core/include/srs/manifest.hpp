#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace srs {

inline constexpr const char* kVersion = "0.1.0";

// FNV-1a 64-bit hash of a file's bytes, as a hex string.
std::string fnv1a64_file(const std::string& path);

// Every output file starts with these '#' comment lines. Two runs with the
// same command, parameters, ion checksum and version produce byte-identical
// output; the timestamp is forced to the epoch when deterministic is set.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string ion_checksum;
    std::string version = kVersion;
    std::string timestamp;

    static RunManifest make(std::string command, const std::string& ion_path,
                            bool deterministic);
    void add(std::string key, std::string value);
    void write(std::ostream& os) const;
};

// 9 significant digits, scientific; enough to verify 1e-6-level properties.
std::string csv_num(double v);

} // namespace srs
