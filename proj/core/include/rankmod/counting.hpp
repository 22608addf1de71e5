#pragma once

#include <cstdint>

#include "rankmod/errors.hpp"

namespace rankmod {

/// n! for 0 <= n <= 20. Throws SizeLimitError outside that range.
[[nodiscard]] constexpr std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw SizeLimitError("factorial argument outside 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Upper bound n!/2^floor(n/2) on the size of any l_inf-snake in S_n.
[[nodiscard]] constexpr std::uint64_t linf_snake_bound(int n) {
  if (n < 1) throw PreconditionError("bound needs n >= 1");
  return factorial(n) >> (n / 2);
}

/// n!/2: a code with minimum Kendall distance 2 holds at most one of each
/// pair {p, p with positions 1,2 swapped}.
[[nodiscard]] constexpr std::uint64_t kendall_snake_bound(int n) {
  if (n < 1) throw PreconditionError("bound needs n >= 1");
  return n == 1 ? 1 : factorial(n) / 2;
}

}  // namespace rankmod
