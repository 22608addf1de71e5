#include "rankmod/ksnake.hpp"

#include <sstream>

#include "rankmod/errors.hpp"
#include "snake_search.hpp"
#include "text_util.hpp"

namespace rankmod {

const TransitionSequence& a5_snake_period() {
  static const TransitionSequence period =
      make_sequence({3, 3, 5, 3, 3, 5, 3, 5, 5, 3, 3, 5, 3, 3, 5, 3, 5, 5, 5});
  return period;
}

KendallSnake embedded_a5_snake() {
  KendallSnake s{Permutation::identity(5), {}};
  const auto& period = a5_snake_period();
  s.transitions.reserve(period.size() * 3);
  for (int rep = 0; rep < 3; ++rep) s.transitions.insert(s.transitions.end(), period.begin(), period.end());
  return s;
}

KendallSnake transport(const KendallSnake& snake, const Permutation& new_start) {
  if (new_start.size() != snake.n()) {
    throw LengthMismatch("transport: start has length " + std::to_string(new_start.size()) +
                         ", snake is over S_" + std::to_string(snake.n()));
  }
  return KendallSnake{new_start, snake.transitions};
}

SnakeReport verify_ksnake(const KendallSnake& snake) {
  return verify_code(snake.as_code(), VerifyMode::exhaustive);
}

bool is_valid_ksnake(const SnakeReport& report) noexcept {
  return report.valid() && report.uniform_parity;
}

std::string format_ksnake(const KendallSnake& snake) {
  std::ostringstream os;
  os << "ksnake n=" << snake.n() << " size=" << snake.size() << "\n" << snake.start << "\n";
  for (std::size_t i = 0; i < snake.transitions.size(); ++i) {
    if (i) os << ' ';
    os << snake.transitions[i].index();
  }
  os << "\n";
  return os.str();
}

KendallSnake parse_ksnake(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t cursor = 0;
  const auto header = detail::next_content_line(lines, &cursor);
  if (header.empty()) throw ParseError("empty K-snake text");
  const auto kv = detail::parse_header(header, "ksnake");
  const auto n = detail::require_int(kv, "n");
  const auto size = detail::require_int(kv, "size");

  const auto start_line = detail::next_content_line(lines, &cursor);
  if (start_line.empty()) throw ParseError("K-snake text has no start permutation");
  Permutation start = [&] {
    try {
      return Permutation::parse(start_line);
    } catch (const InvalidPermutation& e) {
      throw ParseError(std::string("bad start permutation: ") + e.what());
    }
  }();
  if (start.size() != n) {
    throw ParseError("start permutation has length " + std::to_string(start.size()) +
                     " but header says n=" + std::to_string(n));
  }
  TransitionSequence ts;
  for (auto line = detail::next_content_line(lines, &cursor); !line.empty();
       line = detail::next_content_line(lines, &cursor)) {
    auto part = parse_sequence(line);
    ts.insert(ts.end(), part.begin(), part.end());
  }
  if (static_cast<long long>(ts.size()) != size) {
    throw ParseError("header says size=" + std::to_string(size) + " but found " +
                     std::to_string(ts.size()) + " transitions");
  }
  if (ts.empty()) throw ParseError("K-snake has no transitions");
  return KendallSnake{std::move(start), std::move(ts)};
}

KendallSnake import_ksnake(std::string_view text) {
  KendallSnake snake = parse_ksnake(text);
  const SnakeReport rep = verify_ksnake(snake);
  if (!is_valid_ksnake(rep)) {
    std::string what = "K-snake failed verification: ";
    if (!rep.violations.empty()) {
      const auto& v = rep.violations.front();
      what += std::string(to_string(v.kind)) + " at " + std::to_string(v.i) + "," +
              std::to_string(v.j);
      if (v.kind == ViolationKind::distance) what += " (d=" + std::to_string(v.distance) + ")";
    } else {
      what += "codewords do not share one parity";
    }
    throw VerificationError(what);
  }
  return snake;
}

KendallSearchResult search_ksnake(int n, std::size_t target, std::uint64_t budget) {
  detail::SearchRequest req;
  req.n = n;
  req.metric = Metric::kendall;
  req.cyclic = true;
  req.starts.push_back(Permutation::identity(n));
  req.target = target == 0 ? 1 : target;
  req.budget = budget;
  // A K-snake lives in one coset of A_n, so only parity-preserving (odd)
  // transitions are allowed.
  for (int t = 3; t <= n; t += 2) req.move_order.push_back(t);

  const auto outcome = detail::run_snake_search(req);
  KendallSearchResult res;
  res.nodes = outcome.nodes;
  res.exhausted = outcome.exhausted;
  if (outcome.best && outcome.best_size >= req.target) {
    res.snake = KendallSnake{outcome.best->start, outcome.best->transitions};
  }
  return res;
}

}  // namespace rankmod
