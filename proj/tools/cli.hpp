#pragma once

// Command-line surface of the mcd tool, exposed as a library for testing.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcd/arc_set.hpp"
#include "mcd/model.hpp"

namespace mcd::cli {

/// "a-b" (any representative, either order) or "dIr" / "dIg" with 1 <= I <= N.
/// Throws ParseError naming the token for malformed input, vertices out of
/// range, opposite vertices without a colour, and non-m-arcs.
PairedArc parse_arc_literal(const ModelParams &params, std::string_view text);

/// Comma-separated literals; blanks are ignored.
ArcSet parse_arc_list(const ArcUniverse &universe, std::string_view text);

/// {"n":…,"m":…,"arcs":[{"type":"arc","a":1,"b":6} | {"type":"diameter","i":1,"color":"red"}, …]}
nlohmann::ordered_json set_to_json(const ArcUniverse &universe, const ArcSet &set);

struct ParsedSet {
    ModelParams params;
    ArcSet set;
};
/// Reads the set schema; keys other than n, m and arcs are ignored.
ParsedSet set_from_json(const nlohmann::json &doc);

/// Literals joined by commas; "{}" for the empty set.
std::string set_to_text(const ArcUniverse &universe, const ArcSet &set);

/// Deterministic SVG drawing of the 2N-gon and the arcs of `set`.
std::string render_svg(const ArcUniverse &universe, const ArcSet &set);

/// Exit codes: 0 success or property holds, 1 property fails, 2 usage or
/// input error. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mcd::cli
