#include "rankmod/gray_code.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <string>

#include "rankmod/errors.hpp"

namespace rankmod {

std::string_view to_string(Metric m) noexcept { return m == Metric::linf ? "linf" : "kendall"; }

Metric parse_metric(std::string_view text) {
  if (text == "linf") return Metric::linf;
  if (text == "kendall") return Metric::kendall;
  throw ParseError("unknown metric '" + std::string(text) + "'");
}

std::vector<Permutation> GrayCode::codewords() const {
  std::vector<Permutation> out;
  const auto m = size();
  out.reserve(m);
  out.push_back(start);
  for (std::size_t i = 0; i + 1 < m; ++i) out.push_back(apply_transition(out.back(), transitions[i]));
  return out;
}

CodewordTable::CodewordTable(int n, std::size_t rows)
    : n_(n), rows_(rows), data_(static_cast<std::size_t>(n) * rows) {
  if (n < 1 || n > 255) throw SizeLimitError("codeword table needs 1 <= n <= 255");
}

CodewordTable CodewordTable::materialize(const Permutation& start, const TransitionSequence& ts,
                                         std::size_t count) {
  if (count == 0) return CodewordTable(start.size(), 0);
  if (count > ts.size() + 1) throw PreconditionError("materialize: not enough transitions");
  const int n = start.size();
  CodewordTable table(n, count);
  std::vector<int> cur = start.entries();
  for (std::size_t i = 0;; ++i) {
    auto r = table.row(i);
    for (int k = 0; k < n; ++k) r[k] = static_cast<std::uint8_t>(cur[k]);
    if (i + 1 == count) break;
    const int idx = ts[i].index();
    if (idx > n) {
      throw InvalidTransition("transition " + ts[i].to_string() + " at step " +
                              std::to_string(i + 1) + " out of range for n=" + std::to_string(n));
    }
    push_to_top(cur, idx);
  }
  return table;
}

CodewordTable CodewordTable::from_code(const GrayCode& code) {
  return materialize(code.start, code.transitions, code.size());
}

Permutation CodewordTable::permutation(std::size_t i) const {
  const auto r = row(i);
  return Permutation(std::vector<int>(r.begin(), r.end()));
}

int linf_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(static_cast<int>(a[i]) - static_cast<int>(b[i])));
  }
  return d;
}

int kendall_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) noexcept {
  std::array<std::uint8_t, 256> pos_in_b{};
  for (std::size_t i = 0; i < b.size(); ++i) pos_in_b[b[i]] = static_cast<std::uint8_t>(i);
  int inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (pos_in_b[a[i]] > pos_in_b[a[j]]) ++inversions;
  return inversions;
}

}  // namespace rankmod
