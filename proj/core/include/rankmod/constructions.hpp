#pragma once

// Cyclic l_inf-snakes assembled from noncyclic blocks chained by boundary
// transitions that follow an RMGC over the tail elements, plus the size
// formulas they are compared against.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rankmod/blocks.hpp"
#include "rankmod/gray_code.hpp"
#include "rankmod/ksnake.hpp"

namespace rankmod {

inline constexpr int kMaxRmgcSnakeOrder = 12;
inline constexpr std::uint64_t kMaxKendallLiftedSize = 50'000'000;

/// One block of a chained snake: codewords [first, first + size) of the
/// code, followed by the boundary transition into the next block.
struct BlockRecord {
  std::size_t first = 0;
  std::size_t size = 0;
  std::optional<BlockVariant> variant;  // rotation blocks only
  Transition boundary{2};
};

struct ChainedSnake {
  GrayCode code;
  std::vector<BlockRecord> blocks;
};

/// [1, 4, 6, .., 2q-2, 2, 2q, 3, 5, .., 2p-1] with p = ceil(n/2), q = floor(n/2).
[[nodiscard]] Permutation rmgc_snake_start(int n);

/// Cyclic snake of size ceil(n/2)! (floor(n/2) + floor(n/2)!) for
/// 6 <= n <= kMaxRmgcSnakeOrder, chaining rotation blocks along T_p.
[[nodiscard]] ChainedSnake rmgc_snake(int n);

/// n = 4k+1: [1, 2, 4, .., 4k, 3, 5, .., 4k+1]
/// n = 4k+3: [2, 1, 3, 5, .., 4k+3, 4, 6, .., 4k+2]
[[nodiscard]] Permutation kendall_lifted_start(int n);

/// Dimension of the K-snake needed for n: 2k+1 when n = 4k+1, 2k+3 when n = 4k+3.
[[nodiscard]] int kendall_lifted_snake_dimension(int n);

/// Cyclic snake of size ksnake.size() * (2k+1)!, chaining Kendall blocks
/// along T_{2k+1}. Requires n = 4k+1 or 4k+3 with k >= 1 and a verified
/// K-snake of the matching dimension whose last transition is t_{dimension}.
[[nodiscard]] ChainedSnake kendall_lifted_snake(int n, const KendallSnake& ksnake);

struct SizeTable {
  int n = 0;
  std::uint64_t m0 = 0;                ///< prior construction, n >= 4
  std::optional<std::uint64_t> m1;     ///< RMGC construction, n >= 6
  std::optional<std::uint64_t> m2;     ///< K-snake construction, n = 4k±1, k >= 2
  std::uint64_t bound = 0;             ///< n! / 2^floor(n/2)

  friend bool operator==(const SizeTable&, const SizeTable&) = default;
};

/// Exact evaluation for 4 <= n <= 20.
[[nodiscard]] SizeTable size_table(int n);

}  // namespace rankmod
