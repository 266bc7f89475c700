#pragma once

#include <string>
#include <string_view>

namespace citeheat {

// Canonical form of a node name: leading and trailing ASCII whitespace
// trimmed, then Unicode NFC. Throws DataError on invalid UTF-8.
std::string normalize_name(std::string_view raw);

}  // namespace citeheat
