#include "rankmod/document.hpp"

#include <array>
#include <sstream>

#include "rankmod/errors.hpp"
#include "text_util.hpp"

namespace rankmod {

namespace {

constexpr std::array<std::string_view, 5> kReservedKeys{"n", "size", "metric", "cyclic", "method"};

bool is_reserved(std::string_view key) {
  for (auto k : kReservedKeys)
    if (k == key) return true;
  return false;
}

}  // namespace

std::string serialize(const CodeDocument& doc) {
  const auto& c = doc.code;
  std::ostringstream os;
  os << "snake n=" << c.n() << " size=" << c.size() << " metric=" << to_string(c.metric)
     << " cyclic=" << (c.cyclic ? "true" : "false") << " method=" << doc.method;
  for (const auto& [k, v] : doc.params) os << ' ' << k << '=' << v;
  os << '\n' << c.start << '\n' << format_sequence(c.transitions) << '\n';
  if (doc.with_codewords) {
    os << "codewords:\n";
    const auto table = CodewordTable::from_code(c);
    for (std::size_t i = 0; i < table.rows(); ++i) {
      const auto r = table.row(i);
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k) os << ' ';
        os << static_cast<int>(r[k]);
      }
      os << '\n';
    }
  }
  return os.str();
}

CodeDocument parse_document(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t cursor = 0;
  const auto header = detail::next_content_line(lines, &cursor);
  if (header.empty()) throw ParseError("empty document");
  const auto kv = detail::parse_header(header, "snake");

  CodeDocument doc{GrayCode{Permutation::identity(1), {}, true, Metric::linf}, {}, {}, false};
  const auto n = detail::require_int(kv, "n");
  const auto size = detail::require_int(kv, "size");
  doc.code.metric = parse_metric(detail::require_key(kv, "metric"));
  doc.code.cyclic = detail::require_bool(kv, "cyclic");
  doc.method = detail::require_key(kv, "method");
  for (const auto& [k, v] : kv)
    if (!is_reserved(k)) doc.params.emplace_back(k, v);

  const auto start_line = detail::next_content_line(lines, &cursor);
  if (start_line.empty()) throw ParseError("document has no start permutation");
  try {
    doc.code.start = Permutation::parse(start_line);
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string("bad start permutation: ") + e.what());
  }
  if (doc.code.start.size() != n) throw ParseError("start permutation length disagrees with n");

  // Transition lines run until the optional "codewords:" marker.
  std::vector<std::string_view> listing;
  bool in_listing = false;
  for (auto line = detail::next_content_line(lines, &cursor); !line.empty();
       line = detail::next_content_line(lines, &cursor)) {
    if (line == "codewords:") {
      in_listing = true;
      continue;
    }
    if (in_listing) {
      listing.push_back(line);
    } else {
      auto part = parse_sequence(line);
      doc.code.transitions.insert(doc.code.transitions.end(), part.begin(), part.end());
    }
  }
  if (static_cast<long long>(doc.code.size()) != size) {
    throw ParseError("header says size=" + std::to_string(size) + " but transitions give " +
                     std::to_string(doc.code.size()));
  }
  if (in_listing) {
    doc.with_codewords = true;
    if (listing.size() != doc.code.size()) {
      throw ParseError("codeword listing has " + std::to_string(listing.size()) + " rows, expected " +
                       std::to_string(doc.code.size()));
    }
    std::vector<int> cur = doc.code.start.entries();
    for (std::size_t i = 0; i < listing.size(); ++i) {
      Permutation listed = [&] {
        try {
          return Permutation::parse(listing[i]);
        } catch (const InvalidPermutation& e) {
          throw ParseError("codeword " + std::to_string(i) + ": " + e.what());
        }
      }();
      if (listed.entries() != cur) {
        throw ParseError("codeword " + std::to_string(i) + " disagrees with start + transitions");
      }
      if (i + 1 < listing.size()) {
        const int idx = doc.code.transitions[i].index();
        if (idx > static_cast<int>(n)) throw ParseError("transition out of range in listed code");
        push_to_top(cur, idx);
      }
    }
  }
  return doc;
}

FileKind detect_file_kind(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t cursor = 0;
  const auto first = detail::next_content_line(lines, &cursor);
  auto starts_with = [&](std::string_view tag) {
    return first.substr(0, tag.size()) == tag &&
           (first.size() == tag.size() || first[tag.size()] == ' ' || first[tag.size()] == '\t');
  };
  if (starts_with("snake")) return FileKind::code_document;
  if (starts_with("ksnake")) return FileKind::ksnake;
  if (starts_with("rmgc")) return FileKind::rmgc;
  return FileKind::unknown;
}

}  // namespace rankmod
