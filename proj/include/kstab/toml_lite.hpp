#pragma once

#include <json.hpp>

#include <string_view>

namespace kstab {

// Minimal TOML subset sufficient for pair descriptors, mapped onto the same
// JSON document the JSON front end produces. Supported: comments, [table]
// headers, dotted keys, basic "strings", integers, booleans, arrays
// (newlines allowed) and inline tables. Not supported (throws ParseError):
// floats, dates, multiline/literal strings, arrays of tables.
nlohmann::ordered_json toml_to_json(std::string_view text);

}  // namespace kstab
