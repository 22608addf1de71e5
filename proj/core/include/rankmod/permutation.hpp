#pragma once

// Permutations over [n] in one-line notation, push-to-the-top transitions,
// group operations and the two distance functions used by the codes.
//
// Positions and values are 1-based throughout the public interface.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankmod {

class Permutation {
 public:
  /// Throws InvalidPermutation unless `entries` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  /// Parses "1 4 2 6 3 5" (whitespace separated, commas and brackets ignored).
  static Permutation parse(std::string_view text);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(entries_.size()); }

  /// Value at a 1-based position. Throws std::out_of_range.
  [[nodiscard]] int at(int position) const;
  /// Value at a 1-based position, unchecked.
  [[nodiscard]] int operator()(int position) const noexcept { return entries_[position - 1]; }

  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// The push-to-the-top operation t_i: moves the entry at position i to the
/// front. Only i >= 2 is representable; the upper limit depends on the
/// permutation it is applied to.
class Transition {
 public:
  /// Throws InvalidTransition when index < 2.
  explicit Transition(int index);

  /// Accepts "t3", "T3" or "3".
  static Transition parse(std::string_view token);

  [[nodiscard]] int index() const noexcept { return index_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(Transition, Transition) = default;
  friend auto operator<=>(Transition, Transition) = default;

 private:
  int index_;
};

std::ostream& operator<<(std::ostream& os, Transition t);

using TransitionSequence = std::vector<Transition>;

/// Index function view f(j) of a sequence, j 1-based.
[[nodiscard]] int index_at(const TransitionSequence& seq, std::size_t j);

[[nodiscard]] TransitionSequence make_sequence(std::initializer_list<int> indices);
[[nodiscard]] std::string format_sequence(const TransitionSequence& seq);
/// Whitespace separated tokens, each accepted by Transition::parse.
[[nodiscard]] TransitionSequence parse_sequence(std::string_view text);

/// Low-level in-place push-to-the-top on a raw one-line buffer.
/// `index` is 1-based and must satisfy 2 <= index <= entries.size().
void push_to_top(std::span<int> entries, int index) noexcept;

/// t_i [a_1..a_n] = [a_i, a_1, .., a_{i-1}, a_{i+1}, .., a_n].
[[nodiscard]] Permutation apply_transition(const Permutation& p, Transition t);

/// (pi_0, pi_1, .., pi_L) with pi_j = t_{x(j)}(pi_{j-1}).
[[nodiscard]] std::vector<Permutation> apply_sequence(const Permutation& p,
                                                      const TransitionSequence& ts);

/// Last element of apply_sequence without materializing the rest.
[[nodiscard]] Permutation apply_all(const Permutation& p, const TransitionSequence& ts);

/// Right-action convention: r(i) = q(p(i)).
[[nodiscard]] Permutation compose(const Permutation& p, const Permutation& q);
[[nodiscard]] Permutation inverse(const Permutation& p);

enum class Parity { even, odd };

[[nodiscard]] Parity parity(const Permutation& p) noexcept;
[[nodiscard]] std::string_view to_string(Parity parity) noexcept;

/// Chebyshev distance max_i |p(i) - q(i)|.
[[nodiscard]] int linf_distance(const Permutation& p, const Permutation& q);

/// Number of value pairs appearing in opposite relative order.
[[nodiscard]] int kendall_distance(const Permutation& p, const Permutation& q);

}  // namespace rankmod
