#include "rankmod/blocks.hpp"

#include <cstdlib>
#include <string>

#include "rankmod/errors.hpp"
#include "rankmod/rmgc.hpp"

namespace rankmod {

namespace {

bool is_odd(int v) { return v % 2 != 0; }

[[noreturn]] void fail(const std::string& what, const std::string& clause) {
  throw PreconditionError(what + ": " + clause);
}

}  // namespace

std::vector<Permutation> NoncyclicBlock::codewords() const {
  return apply_sequence(start, transitions);
}

GrayCode NoncyclicBlock::as_code(Metric metric) const {
  return GrayCode{start, transitions, false, metric};
}

TransitionSequence rotation_block_transitions(int k, BlockVariant variant) {
  if (k < 3) throw PreconditionError("rotation block: k must be at least 3");
  const RmgcSequence& tk = build_rmgc(k);
  // T_k opens with k-1 copies of t_k; the last of them is the rotation point
  // for `preserve`. For `exchange` the t_{k-1} sits at k^2-k.
  const std::size_t s = variant == BlockVariant::preserve
                            ? static_cast<std::size_t>(k - 1)
                            : static_cast<std::size_t>(k) * static_cast<std::size_t>(k - 1);
  const int expected_last = variant == BlockVariant::preserve ? k : k - 1;
  if (tk.seq[s - 1].index() != expected_last) {
    throw ConstructionError("rotation block: T_" + std::to_string(k) + " has no t" +
                            std::to_string(expected_last) + " at position " + std::to_string(s));
  }
  const TransitionSequence rotated = rotate_after(tk, s);

  TransitionSequence out;
  out.reserve(static_cast<std::size_t>(k - 1) + tk.seq.size());
  for (int i = 0; i < k - 1; ++i) out.emplace_back(k);
  out.emplace_back(k + 1);
  out.insert(out.end(), rotated.begin(), rotated.end() - 1);
  return out;
}

NoncyclicBlock rotation_block(const Permutation& sigma, BlockVariant variant) {
  const int n = sigma.size();
  const std::string what = "rotation block";
  if (n < 6) fail(what, "n must be at least 6, got " + std::to_string(n));
  const int k = n / 2;
  if (!is_odd(sigma(1))) fail(what, "position 1 must hold an odd value");
  for (int i = 2; i <= k + 1; ++i) {
    if (is_odd(sigma(i))) fail(what, "position " + std::to_string(i) + " must hold an even value");
  }
  for (int i = k + 2; i <= n; ++i) {
    if (!is_odd(sigma(i))) fail(what, "position " + std::to_string(i) + " must hold an odd value");
  }
  if (std::abs(sigma(k + 1) - sigma(1)) < 2) {
    fail(what, "|sigma(" + std::to_string(k + 1) + ") - sigma(1)| must be at least 2");
  }

  TransitionSequence ts = rotation_block_transitions(k, variant);
  Permutation end = apply_all(sigma, ts);

  // Expected end shape, from sigma = [b_1, a_2..a_k, a_1, b_2..b_l].
  std::vector<int> expect;
  expect.reserve(static_cast<std::size_t>(n));
  for (int i = 2; i <= k - 1; ++i) expect.push_back(sigma(i));  // a_2..a_{k-1}
  if (variant == BlockVariant::preserve) {
    expect.push_back(sigma(k));      // a_k
    expect.push_back(sigma(k + 1));  // a_1
  } else {
    expect.push_back(sigma(k + 1));
    expect.push_back(sigma(k));
  }
  expect.push_back(sigma(1));
  for (int i = k + 2; i <= n; ++i) expect.push_back(sigma(i));
  if (end.entries() != expect) {
    throw ConstructionError("rotation block ended at [" + end.to_string() + "]");
  }
  return NoncyclicBlock{sigma, std::move(ts), std::move(end)};
}

NoncyclicBlock kendall_block(const Permutation& sigma, const TransitionSequence& ksnake_seq) {
  const std::string what = "kendall block";
  const int n = sigma.size();
  if (ksnake_seq.empty()) fail(what, "K-snake transition sequence is empty");
  if (n < 2) fail(what, "n must be at least 2");

  const bool a_odd = is_odd(sigma(1));
  int l = 0;
  for (int v = 1; v <= n; ++v)
    if (is_odd(v) != a_odd) ++l;
  for (int i = 2; i <= l + 1; ++i) {
    if (is_odd(sigma(i)) == a_odd) {
      fail(what, "position " + std::to_string(i) + " must hold a value of the other parity than sigma(1)");
    }
  }
  for (int i = l + 2; i <= n; ++i) {
    if (is_odd(sigma(i)) != a_odd) {
      fail(what, "position " + std::to_string(i) + " must hold a value of the same parity as sigma(1)");
    }
  }
  for (Transition t : ksnake_seq) {
    if (t.index() > l + 1) {
      fail(what, "transition " + t.to_string() + " touches positions beyond " + std::to_string(l + 1));
    }
  }
  if (ksnake_seq.back().index() != l + 1) {
    fail(what, "last K-snake transition must be t" + std::to_string(l + 1) + ", got " +
                   ksnake_seq.back().to_string());
  }

  TransitionSequence ts(ksnake_seq.begin(), ksnake_seq.end() - 1);
  Permutation end = apply_all(sigma, ts);

  std::vector<int> expect;
  expect.reserve(static_cast<std::size_t>(n));
  for (int i = 2; i <= l + 1; ++i) expect.push_back(sigma(i));
  expect.push_back(sigma(1));
  for (int i = l + 2; i <= n; ++i) expect.push_back(sigma(i));
  if (end.entries() != expect) {
    fail(what, "K-snake sequence does not close cyclically on the first " +
                   std::to_string(l + 1) + " positions");
  }
  return NoncyclicBlock{sigma, std::move(ts), std::move(end)};
}

}  // namespace rankmod
