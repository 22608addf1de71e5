#pragma once

// Noncyclic l_inf-snake segments with prescribed start and end shapes. The
// full snakes in constructions.hpp are chains of these.

#include <cstddef>
#include <vector>

#include "rankmod/gray_code.hpp"
#include "rankmod/permutation.hpp"

namespace rankmod {

struct NoncyclicBlock {
  Permutation start;
  TransitionSequence transitions;  // size() - 1 entries
  Permutation end;

  [[nodiscard]] std::size_t size() const noexcept { return transitions.size() + 1; }
  [[nodiscard]] std::vector<Permutation> codewords() const;
  [[nodiscard]] GrayCode as_code(Metric metric = Metric::linf) const;

  friend bool operator==(const NoncyclicBlock&, const NoncyclicBlock&) = default;
};

/// Which even value ends up at position k+1 of the next block's start.
///   preserve: ends [a_2, .., a_k, a_1, b_1, .., b_l]
///   exchange: ends [a_2, .., a_{k-1}, a_1, a_k, b_1, .., b_l]
enum class BlockVariant { preserve = 1, exchange = 2 };

/// Transitions of the rotated-RMGC block for k = floor(n/2):
/// k-1 copies of t_k, then t_{k+1}, then the first k!-1 entries of T_k
/// rotated so that the t_k at position k-1 (preserve) or the t_{k-1} at
/// position k^2-k (exchange) comes last.
[[nodiscard]] TransitionSequence rotation_block_transitions(int k, BlockVariant variant);

/// Block of size k!+k starting at
///   sigma = [b_1, a_2, .., a_k, a_1, b_2, .., b_l],
/// with k = floor(n/2), l = ceil(n/2), odd b's, even a's and |a_1 - b_1| >= 2.
/// Requires n >= 6. Throws PreconditionError naming the violated clause.
[[nodiscard]] NoncyclicBlock rotation_block(const Permutation& sigma, BlockVariant variant);

/// Block built from a cyclic Kendall snake sequence on the first l+1 positions.
///
/// sigma = [a_1, b_1, .., b_l, a_2, .., a_k] where the a's are every value of
/// one parity and the b's every value of the other; l is therefore fixed by
/// sigma. `ksnake_seq` is the full cyclic sequence of a K-snake in S_{l+1}
/// whose last transition is t_{l+1}. The block uses all but that last
/// transition and ends at [b_1, .., b_l, a_1, a_2, .., a_k].
[[nodiscard]] NoncyclicBlock kendall_block(const Permutation& sigma,
                                           const TransitionSequence& ksnake_seq);

}  // namespace rankmod
