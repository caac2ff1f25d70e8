#include "srs/manifest.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>

#include "srs/errors.hpp"

namespace srs {

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file for checksum: " + path);
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

RunManifest RunManifest::make(std::string command, const std::string& ion_path,
                              bool deterministic) {
    RunManifest m;
    m.command = std::move(command);
    m.ion_checksum = ion_path.empty() ? "none" : ("fnv1a64:" + fnv1a64_file(ion_path));
    if (deterministic) {
        m.timestamp = "1970-01-01T00:00:00Z";
    } else {
        const std::time_t now = std::time(nullptr);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        m.timestamp = buf;
    }
    return m;
}

void RunManifest::add(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
}

void RunManifest::write(std::ostream& os) const {
    os << "# srscalc " << version << "\n";
    os << "# command: " << command << "\n";
    os << "# ion_checksum: " << ion_checksum << "\n";
    os << "# params:";
    for (const auto& [k, v] : parameters) os << " " << k << "=" << v;
    os << "\n";
    os << "# timestamp: " << timestamp << "\n";
}

std::string csv_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return buf;
}

} // namespace srs
