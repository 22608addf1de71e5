#pragma once

// Ground-truth checks for Gray codes and snakes, plus an exhaustive search
// oracle for the maximum snake size in small S_n.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankmod/gray_code.hpp"

namespace rankmod {

enum class VerifyMode { exhaustive, sampled };

[[nodiscard]] std::string_view to_string(VerifyMode m) noexcept;
[[nodiscard]] VerifyMode parse_verify_mode(std::string_view text);

/// Codes up to this size are checked over all pairs by default.
inline constexpr std::size_t kExhaustiveLimit = 20000;

[[nodiscard]] VerifyMode default_verify_mode(std::size_t code_size) noexcept;

enum class ViolationKind { invalid_transition, duplicate, distance, closure };

[[nodiscard]] std::string_view to_string(ViolationKind k) noexcept;

/// Codeword indices are 0-based positions in the code. For closure
/// violations i is the last codeword and j is 0; for invalid transitions i
/// is the 1-based step.
struct Violation {
  ViolationKind kind;
  std::size_t i = 0;
  std::size_t j = 0;
  int distance = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct SnakeReport {
  std::size_t size = 0;
  Metric metric = Metric::linf;
  VerifyMode mode = VerifyMode::exhaustive;
  bool transitions_ok = true;
  bool distinct = true;
  bool cyclic_claimed = false;
  bool cyclic_ok = true;
  /// Smallest pairwise distance seen; nullopt when there are no pairs.
  std::optional<int> min_distance;
  std::uint64_t bound = 0;
  /// 2 for snakes; 1 accepts any Gray code with distinct codewords.
  int required_distance = 2;
  std::uint64_t pairs_checked = 0;
  /// Whether every codeword has the same parity.
  bool uniform_parity = true;
  /// Total offending pairs found; `violations` keeps the first few.
  std::uint64_t violation_count = 0;
  std::vector<Violation> violations;

  [[nodiscard]] bool valid() const noexcept;
  [[nodiscard]] bool within_bound() const noexcept { return bound == 0 || size <= bound; }

  /// valid=<bool> size=<M> min_d=<d> metric=<tag> bound=<b> mode=<mode>
  [[nodiscard]] std::string summary_line() const;
  /// Multi-line human readable rendering, ending with the summary line.
  [[nodiscard]] std::string render() const;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  /// Worker threads for exhaustive pair checks; 0 picks hardware concurrency.
  unsigned threads = 0;
  /// Sampled mode: every pair at most `window` apart (cyclically) ...
  std::size_t window = 64;
  /// ... plus this many uniformly drawn cross pairs.
  std::uint64_t sample_pairs = 2'000'000;
  std::uint64_t seed = 0x5eed;
  std::size_t max_violations = 16;
  int required_distance = 2;
};

/// Never throws on a bad code; every finding goes into the report.
[[nodiscard]] SnakeReport verify_code(const GrayCode& code, const VerifyOptions& options);
[[nodiscard]] SnakeReport verify_code(const GrayCode& code, VerifyMode mode);
[[nodiscard]] SnakeReport verify_code(const GrayCode& code);

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

struct MaxSnakeResult {
  std::size_t best_size = 0;
  std::optional<GrayCode> witness;
  /// True when the whole search space was covered, so best_size is exact.
  bool exhausted = false;
  std::uint64_t nodes = 0;
};

/// Largest (cyclic, if requested) snake in S_n under `metric`, n <= 5.
/// Kendall searches start from the identity only (right-invariance); l_inf
/// searches try every start. Throws SizeLimitError for n > 5.
[[nodiscard]] MaxSnakeResult exhaustive_max_snake(int n, Metric metric, bool cyclic,
                                                  std::uint64_t budget = kDefaultSearchBudget);

}  // namespace rankmod
