#ifndef MPBN_BNET_HPP
#define MPBN_BNET_HPP

#include "mpbn/network.hpp"

#include <string>
#include <string_view>

#include "json.hpp"

namespace mpbn {

/// Parses BoolNet-style text: one `name, expression` per line, `#` comments,
/// blank lines ignored. Operators `!`, `&`, `|`, parentheses, and the
/// constants `0` / `1`. Components are ordered by first definition; a
/// leading `targets, factors` header line is accepted and skipped.
///
/// Throws `ParseError` (with line number) on syntax errors, duplicate
/// definitions and references to undefined components.
BooleanNetwork parse_bnet(std::string_view text);

/// Reads and parses a `.bnet` file.
BooleanNetwork load_bnet(const std::string& path);

/// Renders in the grammar accepted by `parse_bnet`.
std::string render_bnet(const BooleanNetwork& net);

/// `{ "nodes": [names...], "functions": { name: expr } }`
nlohmann::json network_to_json(const BooleanNetwork& net);

}  // namespace mpbn

#endif  // MPBN_BNET_HPP
