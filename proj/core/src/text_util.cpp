#include "text_util.hpp"

#include <cctype>
#include <charconv>

#include "rankmod/errors.hpp"

namespace rankmod::detail {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  for (auto& l : lines)
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view next_content_line(const std::vector<std::string_view>& lines,
                                   std::size_t* cursor) {
  while (*cursor < lines.size()) {
    auto l = trim(lines[*cursor]);
    ++*cursor;
    if (!l.empty()) return l;
  }
  return {};
}

KeyValues parse_header(std::string_view line, std::string_view tag) {
  line = trim(line);
  if (line.substr(0, tag.size()) != tag ||
      (line.size() > tag.size() && !std::isspace(static_cast<unsigned char>(line[tag.size()])))) {
    throw ParseError("expected header starting with '" + std::string(tag) + "'");
  }
  line.remove_prefix(tag.size());
  KeyValues kv;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) {
      auto tok = line.substr(i, j - i);
      const auto eq = tok.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("header token '" + std::string(tok) + "' is not key=value");
      }
      kv.emplace_back(std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1)));
    }
    i = j;
  }
  return kv;
}

const std::string& require_key(const KeyValues& kv, std::string_view key) {
  for (const auto& [k, v] : kv)
    if (k == key) return v;
  throw ParseError("header is missing '" + std::string(key) + "'");
}

long long require_int(const KeyValues& kv, std::string_view key) {
  const auto& v = require_key(kv, key);
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ParseError("header value " + std::string(key) + "='" + v + "' is not an integer");
  }
  return out;
}

bool require_bool(const KeyValues& kv, std::string_view key) {
  const auto& v = require_key(kv, key);
  if (v == "true") return true;
  if (v == "false") return false;
  throw ParseError("header value " + std::string(key) + "='" + v + "' is not true/false");
}

}  // namespace rankmod::detail
