#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rankmod/permutation.hpp"

namespace rankmod {

enum class Metric { linf, kendall };

[[nodiscard]] std::string_view to_string(Metric m) noexcept;
/// "linf" or "kendall"; throws ParseError otherwise.
[[nodiscard]] Metric parse_metric(std::string_view text);

/// A Gray code given by its first codeword and its transition sequence.
/// Codewords are always derived from start + transitions.
///
/// For a cyclic code of size M the sequence has M transitions, the last one
/// closing back to start. A noncyclic code of size M has M-1 transitions.
struct GrayCode {
  Permutation start;
  TransitionSequence transitions;
  bool cyclic = true;
  Metric metric = Metric::linf;

  [[nodiscard]] int n() const noexcept { return start.size(); }
  [[nodiscard]] std::size_t size() const noexcept {
    return cyclic ? transitions.size() : transitions.size() + 1;
  }
  /// (c_0, .., c_{M-1}); the closing transition is not applied.
  [[nodiscard]] std::vector<Permutation> codewords() const;

  friend bool operator==(const GrayCode&, const GrayCode&) = default;
};

/// Codewords packed row-major into one buffer, `n` bytes per codeword.
class CodewordTable {
 public:
  CodewordTable(int n, std::size_t rows);

  /// Materializes the first `count` codewords of start + transitions.
  /// Throws InvalidTransition on an out-of-range index.
  static CodewordTable materialize(const Permutation& start, const TransitionSequence& ts,
                                   std::size_t count);
  static CodewordTable from_code(const GrayCode& code);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::span<const std::uint8_t> row(std::size_t i) const noexcept {
    return {data_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] std::span<std::uint8_t> row(std::size_t i) noexcept {
    return {data_.data() + i * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  [[nodiscard]] Permutation permutation(std::size_t i) const;

 private:
  int n_;
  std::size_t rows_;
  std::vector<std::uint8_t> data_;
};

[[nodiscard]] int linf_distance(std::span<const std::uint8_t> a,
                                std::span<const std::uint8_t> b) noexcept;
[[nodiscard]] int kendall_distance(std::span<const std::uint8_t> a,
                                   std::span<const std::uint8_t> b) noexcept;

}  // namespace rankmod
