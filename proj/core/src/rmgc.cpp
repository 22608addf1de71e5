#include "rankmod/rmgc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "rankmod/counting.hpp"
#include "rankmod/errors.hpp"
#include "text_util.hpp"

namespace rankmod {

namespace {

RmgcSequence lift(const RmgcSequence& lower) {
  const int n = lower.n + 1;
  RmgcSequence out;
  out.n = n;
  out.seq.reserve(static_cast<std::size_t>(factorial(n)));
  const Transition top(n);
  for (Transition t : lower.seq) {
    for (int c = 0; c < n - 1; ++c) out.seq.push_back(top);
    out.seq.emplace_back(n - t.index() + 1);
  }
  return out;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::unique_ptr<const RmgcSequence>>& cache() {
  static std::map<int, std::unique_ptr<const RmgcSequence>> c;
  return c;
}

}  // namespace

RmgcSequence base_t3() { return RmgcSequence{3, make_sequence({3, 3, 2, 3, 3, 2})}; }

const RmgcSequence& build_rmgc(int n) {
  if (n < 3) throw PreconditionError("build_rmgc: n must be at least 3, got " + std::to_string(n));
  if (n > kMaxRmgcOrder) {
    throw SizeLimitError("build_rmgc: n=" + std::to_string(n) + " exceeds cap " +
                         std::to_string(kMaxRmgcOrder));
  }
  std::lock_guard lock(cache_mutex());
  auto& c = cache();
  if (auto it = c.find(n); it != c.end()) return *it->second;

  int have = 3;
  if (!c.count(3)) {
    auto base = std::make_unique<const RmgcSequence>(base_t3());
    (void)special_positions(*base);
    c.emplace(3, std::move(base));
  }
  for (const auto& [k, _] : c)
    if (k <= n) have = std::max(have, k);
  for (int k = have + 1; k <= n; ++k) {
    auto next = std::make_unique<const RmgcSequence>(lift(*c.at(k - 1)));
    // Check the special positions at every level.
    (void)special_positions(*next);
    c.emplace(k, std::move(next));
  }
  return *c.at(n);
}

SpecialPositions special_positions(const RmgcSequence& r) {
  const int n = r.n;
  const SpecialPositions pos{static_cast<std::size_t>(n),
                             static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1), 1};
  auto expect = [&](std::size_t p, int index) {
    if (p > r.seq.size() || r.seq[p - 1].index() != index) {
      throw ConstructionError("rmgc n=" + std::to_string(n) + ": expected t" +
                              std::to_string(index) + " at position " + std::to_string(p));
    }
  };
  expect(pos.pos_t2, 2);
  expect(pos.pos_t_n_minus_1, n - 1);
  expect(pos.pos_t_n, n);
  return pos;
}

TransitionSequence rotate_after(const TransitionSequence& seq, std::size_t s) {
  if (s < 1 || s > seq.size()) {
    throw std::out_of_range("rotate_after: position " + std::to_string(s) + " outside 1.." +
                            std::to_string(seq.size()));
  }
  TransitionSequence out;
  out.reserve(seq.size());
  out.insert(out.end(), seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end());
  out.insert(out.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(s));
  return out;
}

TransitionSequence rotate_after(const RmgcSequence& r, std::size_t s) {
  return rotate_after(r.seq, s);
}

std::string format_rmgc(const RmgcSequence& r, bool with_header) {
  std::string out;
  if (with_header) {
    out += "rmgc n=" + std::to_string(r.n) + " len=" + std::to_string(r.seq.size()) + "\n";
  }
  out += format_sequence(r.seq);
  out += '\n';
  return out;
}

RmgcSequence parse_rmgc(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t cursor = 0;
  auto first = detail::next_content_line(lines, &cursor);
  if (first.empty()) throw ParseError("empty rmgc text");

  RmgcSequence out;
  long long declared_len = -1;
  if (first.substr(0, 4) == "rmgc") {
    const auto kv = detail::parse_header(first, "rmgc");
    out.n = static_cast<int>(detail::require_int(kv, "n"));
    declared_len = detail::require_int(kv, "len");
  } else {
    cursor = 0;
  }
  for (auto line = detail::next_content_line(lines, &cursor); !line.empty();
       line = detail::next_content_line(lines, &cursor)) {
    auto part = parse_sequence(line);
    out.seq.insert(out.seq.end(), part.begin(), part.end());
  }
  if (out.seq.empty()) throw ParseError("rmgc text has no transitions");
  if (declared_len >= 0 && static_cast<std::size_t>(declared_len) != out.seq.size()) {
    throw ParseError("rmgc header len=" + std::to_string(declared_len) + " but found " +
                     std::to_string(out.seq.size()) + " transitions");
  }
  int max_index = 0;
  for (Transition t : out.seq) max_index = std::max(max_index, t.index());
  if (out.n == 0) out.n = max_index;
  if (max_index > out.n) {
    throw ParseError("transition t" + std::to_string(max_index) + " exceeds n=" +
                     std::to_string(out.n));
  }
  return out;
}

}  // namespace rankmod
