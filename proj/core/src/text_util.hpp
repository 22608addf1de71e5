#pragma once

// Line and header helpers shared by the text formats.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rankmod::detail {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string_view> split_lines(std::string_view text);
std::string_view trim(std::string_view s);

/// Next non-blank line at or after `*cursor`; empty view at end.
std::string_view next_content_line(const std::vector<std::string_view>& lines, std::size_t* cursor);

/// Parses "<tag> k1=v1 k2=v2 ..." and checks the tag. Throws ParseError.
KeyValues parse_header(std::string_view line, std::string_view tag);

/// Value for `key`, or throws ParseError naming it.
const std::string& require_key(const KeyValues& kv, std::string_view key);
long long require_int(const KeyValues& kv, std::string_view key);
bool require_bool(const KeyValues& kv, std::string_view key);

}  // namespace rankmod::detail
