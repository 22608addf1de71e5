#include "rankmod/constructions.hpp"

#include <cstdlib>
#include <string>

#include "rankmod/counting.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/rmgc.hpp"

namespace rankmod {

namespace {

void append(TransitionSequence& out, const TransitionSequence& part) {
  out.insert(out.end(), part.begin(), part.end());
}

}  // namespace

Permutation rmgc_snake_start(int n) {
  if (n < 6) throw PreconditionError("rmgc snake: n must be at least 6, got " + std::to_string(n));
  const int p = (n + 1) / 2;
  const int q = n / 2;
  std::vector<int> e{1};
  for (int v = 4; v <= 2 * q - 2; v += 2) e.push_back(v);
  e.push_back(2);
  e.push_back(2 * q);
  for (int v = 3; v <= 2 * p - 1; v += 2) e.push_back(v);
  return Permutation(std::move(e));
}

ChainedSnake rmgc_snake(int n) {
  if (n < 6) throw PreconditionError("rmgc snake: n must be at least 6, got " + std::to_string(n));
  if (n > kMaxRmgcSnakeOrder) {
    throw SizeLimitError("rmgc snake: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxRmgcSnakeOrder));
  }
  const int p = (n + 1) / 2;
  const int q = n / 2;
  const RmgcSequence& tail = build_rmgc(p);
  const std::size_t block_size = static_cast<std::size_t>(factorial(q)) + static_cast<std::size_t>(q);

  ChainedSnake out{GrayCode{rmgc_snake_start(n), {}, true, Metric::linf}, {}};
  out.code.transitions.reserve(block_size * tail.seq.size());
  out.blocks.reserve(tail.seq.size());

  Permutation cur = out.code.start;
  for (std::size_t l = 0; l < tail.seq.size(); ++l) {
    const int boundary_pos = tail.seq[l].index() + q;
    const int next_front = cur(boundary_pos);
    const int at_q1 = cur(q + 1);
    if (at_q1 != 2 * q && at_q1 != 2) {
      throw ConstructionError("rmgc snake: position " + std::to_string(q + 1) + " holds " +
                              std::to_string(at_q1) + " at block " + std::to_string(l));
    }
    // Keep 2q at position q+1 unless the next front value is adjacent to it.
    const bool want_2q = std::abs(next_front - 2 * q) != 1;
    const bool have_2q = at_q1 == 2 * q;
    const BlockVariant variant = want_2q == have_2q ? BlockVariant::preserve : BlockVariant::exchange;

    NoncyclicBlock block = rotation_block(cur, variant);
    const Transition boundary(boundary_pos);
    out.blocks.push_back(BlockRecord{l * block_size, block.size(), variant, boundary});
    append(out.code.transitions, block.transitions);
    out.code.transitions.push_back(boundary);
    cur = apply_transition(block.end, boundary);
  }
  if (cur != out.code.start) {
    throw ConstructionError("rmgc snake: chain does not close, ended at [" + cur.to_string() + "]");
  }
  return out;
}

int kendall_lifted_snake_dimension(int n) {
  if (n >= 5 && n % 4 == 1) return (n + 1) / 2;
  if (n >= 7 && n % 4 == 3) return (n + 3) / 2;
  throw PreconditionError("kendall lifted snake: n must be 4k+1 or 4k+3 with k >= 1, got " +
                          std::to_string(n));
}

Permutation kendall_lifted_start(int n) {
  (void)kendall_lifted_snake_dimension(n);
  std::vector<int> e;
  if (n % 4 == 1) {
    e.push_back(1);
    for (int v = 2; v <= n - 1; v += 2) e.push_back(v);
    for (int v = 3; v <= n; v += 2) e.push_back(v);
  } else {
    e.push_back(2);
    for (int v = 1; v <= n; v += 2) e.push_back(v);
    for (int v = 4; v <= n - 1; v += 2) e.push_back(v);
  }
  return Permutation(std::move(e));
}

ChainedSnake kendall_lifted_snake(int n, const KendallSnake& ksnake) {
  const int dim = kendall_lifted_snake_dimension(n);
  if (ksnake.n() != dim) {
    throw PreconditionError("kendall lifted snake: n=" + std::to_string(n) +
                            " needs a K-snake over S_" + std::to_string(dim) + ", got S_" +
                            std::to_string(ksnake.n()));
  }
  if (ksnake.transitions.empty() || ksnake.transitions.back().index() != dim) {
    throw PreconditionError("kendall lifted snake: last K-snake transition must be t" +
                            std::to_string(dim));
  }
  if (!is_valid_ksnake(verify_ksnake(ksnake))) {
    throw PreconditionError("kendall lifted snake: input is not a valid K-snake");
  }
  // Tail elements: 2k+1 in both cases.
  const int r = n % 4 == 1 ? dim : dim - 2;
  const int shift = dim - 1;
  const RmgcSequence& tail = build_rmgc(r);
  const std::size_t m = ksnake.size();
  if (static_cast<std::uint64_t>(m) * tail.seq.size() > kMaxKendallLiftedSize) {
    throw SizeLimitError("kendall lifted snake: size exceeds cap");
  }

  ChainedSnake out{GrayCode{kendall_lifted_start(n), {}, true, Metric::linf}, {}};
  out.code.transitions.reserve(m * tail.seq.size());
  Permutation cur = out.code.start;
  for (std::size_t j = 0; j < tail.seq.size(); ++j) {
    NoncyclicBlock block = kendall_block(cur, ksnake.transitions);
    const Transition boundary(tail.seq[j].index() + shift);
    out.blocks.push_back(BlockRecord{j * m, block.size(), std::nullopt, boundary});
    append(out.code.transitions, block.transitions);
    out.code.transitions.push_back(boundary);
    cur = apply_transition(block.end, boundary);
  }
  if (cur != out.code.start) {
    throw ConstructionError("kendall lifted snake: chain does not close, ended at [" +
                            cur.to_string() + "]");
  }
  return out;
}

SizeTable size_table(int n) {
  if (n < 4) throw PreconditionError("size table needs n >= 4, got " + std::to_string(n));
  if (n > 20) throw SizeLimitError("size table supports n <= 20");
  const int p = (n + 1) / 2;
  const int q = n / 2;
  SizeTable t;
  t.n = n;
  t.m0 = factorial(p) * (static_cast<std::uint64_t>(q) + factorial(q - 1));
  if (n >= 6) t.m1 = factorial(p) * (static_cast<std::uint64_t>(q) + factorial(q));
  if (n % 4 == 1 && n >= 9) {
    const int k = (n - 1) / 4;
    t.m2 = (factorial(2 * k + 1) / 2 - static_cast<std::uint64_t>(2 * k) + 1) * factorial(2 * k + 1);
  } else if (n % 4 == 3 && n >= 7) {
    const int k = (n + 1) / 4;
    t.m2 = (factorial(2 * k + 1) / 2 - static_cast<std::uint64_t>(2 * k) + 1) * factorial(2 * k - 1);
  }
  t.bound = linf_snake_bound(n);
  return t;
}

}  // namespace rankmod
