#pragma once

// Depth-first snake search over S_n (n <= 8) shared by the max-snake oracle
// and the Kendall snake searcher.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankmod/gray_code.hpp"

namespace rankmod::detail {

inline constexpr int kMaxSearchOrder = 8;

struct SearchRequest {
  int n = 0;
  Metric metric = Metric::linf;
  bool cyclic = true;
  /// Starting codewords to try, in order.
  std::vector<Permutation> starts;
  /// Stop at the first snake of at least this size; 0 maximizes instead.
  std::size_t target = 0;
  std::uint64_t budget = 0;
  /// Transition indices in the order they are tried.
  std::vector<int> move_order;
};

struct SearchOutcome {
  std::size_t best_size = 0;
  std::optional<GrayCode> best;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

SearchOutcome run_snake_search(const SearchRequest& request);

}  // namespace rankmod::detail
