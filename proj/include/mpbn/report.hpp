#ifndef MPBN_REPORT_HPP
#define MPBN_REPORT_HPP

#include "mpbn/network.hpp"

#include <string>
#include <string_view>

#include "json.hpp"

namespace mpbn {

/// Hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

struct LoadedModel {
    BooleanNetwork net;
    std::string path;
    std::string sha256;  // of the file contents
};

/// Reads and parses a `.bnet` file, recording its content hash.
LoadedModel load_model(const std::string& path);

/// Parses a configuration either as a 0/1 string in component order or as a
/// complete `name=0,name=1,...` list. Throws `Error` on unknown names,
/// missing or repeated components, or a dimension mismatch.
Configuration parse_configuration(const BooleanNetwork& net, std::string_view text);

/// Machine-readable result of one command:
///   {"command", "model": {"path", "sha256"} | null, "parameters", "results",
///    "timings": {...ms}, "incomplete"}
struct Report {
    std::string command;
    nlohmann::json model;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();
    bool incomplete = false;

    void set_model(const LoadedModel& m);
    nlohmann::json to_json() const;
};

}  // namespace mpbn

#endif  // MPBN_REPORT_HPP
