#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tempo {

// Collapses runs of whitespace to single spaces and trims the ends.
std::string normalize_ws(std::string_view text);

// Splits on whitespace; never returns empty tokens.
std::vector<std::string> split_ws(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string to_lower(std::string_view s);

// Splits a UTF-8 string into code-point substrings. Bytes that do not form a
// valid sequence are returned as single-byte chunks.
std::vector<std::string> utf8_chars(std::string_view s);

}  // namespace tempo
