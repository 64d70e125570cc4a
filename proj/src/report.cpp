#include "mpbn/report.hpp"

#include "mpbn/bnet.hpp"
#include "mpbn/error.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace mpbn {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * length);
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return {parse_bnet(text), path, sha256_hex(text)};
    } catch (const ParseError& e) {
        throw ParseError(e.line(), path + ": " + e.what());
    }
}

Configuration parse_configuration(const BooleanNetwork& net, std::string_view text) {
    const std::size_t n = net.size();
    if (text.find('=') == std::string_view::npos) {
        if (text.size() != n) {
            throw Error("configuration \"" + std::string(text) + "\" has " + std::to_string(text.size()) +
                        " components, the network has " + std::to_string(n));
        }
        return Configuration::from_string(text);
    }
    Configuration x(n);
    std::vector<bool> seen(n, false);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        pos = comma + 1;
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw Error("expected name=0/1 in \"" + std::string(item) + "\"");
        const std::string_view name = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        const auto idx = net.index_of(name);
        if (!idx) throw Error("unknown component \"" + std::string(name) + "\"");
        if (seen[*idx]) throw Error("component \"" + std::string(name) + "\" assigned twice");
        if (value != "0" && value != "1") {
            throw Error("component \"" + std::string(name) + "\" needs value 0 or 1");
        }
        seen[*idx] = true;
        x.set(*idx, value == "1");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen[i]) throw Error("configuration does not assign component \"" + net.name(i) + "\"");
    }
    return x;
}

void Report::set_model(const LoadedModel& m) { model = {{"path", m.path}, {"sha256", m.sha256}}; }

nlohmann::json Report::to_json() const {
    return {{"command", command}, {"model", model},     {"parameters", parameters},
            {"results", results}, {"timings", timings}, {"incomplete", incomplete}};
}

}  // namespace mpbn
