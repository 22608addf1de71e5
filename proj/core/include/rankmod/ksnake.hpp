#pragma once

// Snakes under the Kendall tau metric: the built-in (5,57) snake in A_5,
// transport to other starting permutations, a text format for externally
// constructed snakes, and a depth-first searcher used as an oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rankmod/gray_code.hpp"
#include "rankmod/permutation.hpp"
#include "rankmod/verify.hpp"

namespace rankmod {

/// A cyclic Kendall snake: `transitions` has one entry per codeword, the
/// last one closing back to `start`.
struct KendallSnake {
  Permutation start;
  TransitionSequence transitions;

  [[nodiscard]] int n() const noexcept { return start.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return transitions.size(); }
  [[nodiscard]] GrayCode as_code() const { return GrayCode{start, transitions, true, Metric::kendall}; }

  friend bool operator==(const KendallSnake&, const KendallSnake&) = default;
};

/// The 19-transition period that, repeated three times, gives the snake.
[[nodiscard]] const TransitionSequence& a5_snake_period();

/// The (5, 57) snake in A_5, starting at the identity.
[[nodiscard]] KendallSnake embedded_a5_snake();

/// Same transition sequence applied from `new_start`. Throws LengthMismatch.
[[nodiscard]] KendallSnake transport(const KendallSnake& snake, const Permutation& new_start);

/// Full check: distinct, cyclic, minimum Kendall distance >= 2, and one
/// parity across all codewords.
[[nodiscard]] SnakeReport verify_ksnake(const KendallSnake& snake);
[[nodiscard]] bool is_valid_ksnake(const SnakeReport& report) noexcept;

/// Three lines: "ksnake n=<n> size=<M>", the start permutation, and the M
/// transition indices.
[[nodiscard]] std::string format_ksnake(const KendallSnake& snake);

/// Parses only. Throws ParseError.
[[nodiscard]] KendallSnake parse_ksnake(std::string_view text);

/// Parses and verifies. Throws ParseError, or VerificationError naming the
/// first violation.
[[nodiscard]] KendallSnake import_ksnake(std::string_view text);

struct KendallSearchResult {
  std::optional<KendallSnake> snake;
  std::uint64_t nodes = 0;
  /// True when the search space was fully explored without reaching the
  /// target, so no such snake exists.
  bool exhausted = false;
};

/// Depth-first search from the identity of S_n for a cyclic K-snake of size
/// at least `target`, visiting at most `budget` nodes. n <= 8. Only odd
/// transitions are used, so every result has uniform parity.
[[nodiscard]] KendallSearchResult search_ksnake(int n, std::size_t target, std::uint64_t budget);

}  // namespace rankmod
