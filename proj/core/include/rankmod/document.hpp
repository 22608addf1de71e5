#pragma once

// Line-oriented text form of a Gray code:
//
//   snake n=<n> size=<M> metric=<tag> cyclic=<bool> method=<name> [key=value ...]
//   <start permutation>
//   <transitions, whitespace separated>
//   codewords:                      (optional)
//   <one codeword per line>
//
// Cyclic codes list M transitions, noncyclic codes M-1.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankmod/gray_code.hpp"

namespace rankmod {

struct CodeDocument {
  GrayCode code;
  std::string method;
  std::vector<std::pair<std::string, std::string>> params;
  bool with_codewords = false;

  friend bool operator==(const CodeDocument&, const CodeDocument&) = default;
};

[[nodiscard]] std::string serialize(const CodeDocument& doc);

/// Throws ParseError on malformed input, including a codeword listing that
/// disagrees with start + transitions.
[[nodiscard]] CodeDocument parse_document(std::string_view text);

enum class FileKind { code_document, ksnake, rmgc, unknown };

/// Classifies text by its first non-blank line.
[[nodiscard]] FileKind detect_file_kind(std::string_view text);

}  // namespace rankmod
