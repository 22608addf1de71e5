#pragma once

// Cyclic and complete rank-modulation Gray codes (RMGCs) built by the
// standard recursion: for each transition t_x of T_{n-1}, emit n-1 copies of
// t_n followed by t_{n-x+1}.

#include <cstddef>
#include <string>
#include <string_view>

#include "rankmod/permutation.hpp"

namespace rankmod {

inline constexpr int kMaxRmgcOrder = 10;

struct RmgcSequence {
  int n = 0;
  TransitionSequence seq;  // length n!

  friend bool operator==(const RmgcSequence&, const RmgcSequence&) = default;
};

/// (t3, t3, t2, t3, t3, t2).
[[nodiscard]] RmgcSequence base_t3();

/// The recursive n-RMGC. Results are memoized per process and shared; the
/// returned reference stays valid for the lifetime of the program.
/// Throws PreconditionError for n < 3 and SizeLimitError for n > kMaxRmgcOrder.
[[nodiscard]] const RmgcSequence& build_rmgc(int n);

/// 1-based positions holding t_2, t_{n-1} and t_n.
struct SpecialPositions {
  std::size_t pos_t2 = 0;
  std::size_t pos_t_n_minus_1 = 0;
  std::size_t pos_t_n = 0;

  friend bool operator==(const SpecialPositions&, const SpecialPositions&) = default;
};

/// Returns (n, n^2 - n, 1) after checking the sequence really carries t_2,
/// t_{n-1} and t_n there. Throws ConstructionError otherwise.
[[nodiscard]] SpecialPositions special_positions(const RmgcSequence& r);

/// Cyclic rotation so that the element at 1-based position s becomes last.
/// Throws std::out_of_range unless 1 <= s <= seq.size().
[[nodiscard]] TransitionSequence rotate_after(const TransitionSequence& seq, std::size_t s);
[[nodiscard]] TransitionSequence rotate_after(const RmgcSequence& r, std::size_t s);

/// "rmgc n=<n> len=<n!>" header line (optional) followed by the tokens.
[[nodiscard]] std::string format_rmgc(const RmgcSequence& r, bool with_header = true);
/// Accepts the output of format_rmgc, with or without header. Without a
/// header n is taken as the largest index seen. Only parses; does not check
/// completeness.
[[nodiscard]] RmgcSequence parse_rmgc(std::string_view text);

}  // namespace rankmod
