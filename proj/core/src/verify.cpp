#include "rankmod/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string_view>
#include <thread>
#include <unordered_map>

#include "rankmod/counting.hpp"
#include "rankmod/errors.hpp"
#include "snake_search.hpp"

namespace rankmod {

namespace {

using DistanceFn = int (*)(std::span<const std::uint8_t>, std::span<const std::uint8_t>) noexcept;

DistanceFn distance_fn(Metric m) {
  return m == Metric::linf ? static_cast<DistanceFn>(&linf_distance)
                           : static_cast<DistanceFn>(&kendall_distance);
}

bool row_is_odd(std::span<const std::uint8_t> row) {
  const std::size_t n = row.size();
  std::vector<bool> seen(n + 1, false);
  std::size_t cycles = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = row[j - 1]) seen[j] = true;
  }
  return (n - cycles) % 2 != 0;
}

struct PairScan {
  std::optional<int> min_distance;
  std::uint64_t pairs = 0;
  std::uint64_t bad = 0;
  std::vector<Violation> violations;

  int required = 2;

  void see(std::size_t i, std::size_t j, int d, std::size_t cap) {
    ++pairs;
    if (!min_distance || d < *min_distance) min_distance = d;
    // Equal codewords are reported by the duplicate pass.
    if (d < required && d > 0) {
      ++bad;
      if (violations.size() < cap) violations.push_back({ViolationKind::distance, i, j, d});
    }
  }

  void merge(const PairScan& other, std::size_t cap) {
    pairs += other.pairs;
    bad += other.bad;
    if (other.min_distance && (!min_distance || *other.min_distance < *min_distance)) {
      min_distance = other.min_distance;
    }
    for (const auto& v : other.violations) {
      if (violations.size() >= cap) break;
      violations.push_back(v);
    }
  }
};

PairScan scan_rows(const CodewordTable& table, DistanceFn dist, int required, std::size_t begin,
                   std::size_t end, std::size_t cap) {
  PairScan scan;
  scan.required = required;
  const std::size_t m = table.rows();
  for (std::size_t i = begin; i < end; ++i) {
    const auto a = table.row(i);
    for (std::size_t j = i + 1; j < m; ++j) scan.see(i, j, dist(a, table.row(j)), cap);
  }
  return scan;
}

PairScan scan_exhaustive(const CodewordTable& table, DistanceFn dist, int required,
                         unsigned threads, std::size_t cap) {
  const std::size_t m = table.rows();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 16);
  if (m < 2048 || threads == 1) return scan_rows(table, dist, required, 0, m, cap);

  // Split rows so that every chunk holds roughly the same number of pairs.
  const double total = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
  std::vector<std::size_t> bounds{0};
  double acc = 0;
  for (std::size_t i = 0; i < m; ++i) {
    acc += static_cast<double>(m - 1 - i);
    if (acc >= total * static_cast<double>(bounds.size()) / threads && bounds.size() < threads) {
      bounds.push_back(i + 1);
    }
  }
  bounds.push_back(m);

  std::vector<PairScan> parts(bounds.size() - 1);
  {
    std::vector<std::jthread> workers;
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
      workers.emplace_back([&, c] { parts[c] = scan_rows(table, dist, required, bounds[c], bounds[c + 1], cap); });
    }
  }
  PairScan out;
  for (const auto& p : parts) out.merge(p, cap);
  return out;
}

PairScan scan_sampled(const CodewordTable& table, DistanceFn dist, bool cyclic,
                      const VerifyOptions& opt) {
  PairScan scan;
  scan.required = opt.required_distance;
  const std::size_t m = table.rows();
  if (m < 2) return scan;
  const std::size_t w = std::min(opt.window, m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t step = 1; step <= w; ++step) {
      std::size_t j = i + step;
      if (j >= m) {
        if (!cyclic) break;
        j -= m;
        if (j >= i) break;
      }
      const auto lo = std::min(i, j);
      const auto hi = std::max(i, j);
      scan.see(lo, hi, dist(table.row(lo), table.row(hi)), opt.max_violations);
    }
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  for (std::uint64_t s = 0; s < opt.sample_pairs; ++s) {
    auto i = pick(rng);
    auto j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    scan.see(i, j, dist(table.row(i), table.row(j)), opt.max_violations);
  }
  std::sort(scan.violations.begin(), scan.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.i, a.j) < std::tie(b.i, b.j);
            });
  return scan;
}

std::uint64_t bound_for(Metric m, int n) {
  if (n > 20) return 0;
  return m == Metric::linf ? linf_snake_bound(n) : kendall_snake_bound(n);
}

}  // namespace

std::string_view to_string(VerifyMode m) noexcept {
  return m == VerifyMode::exhaustive ? "exhaustive" : "sampled";
}

VerifyMode parse_verify_mode(std::string_view text) {
  if (text == "exhaustive") return VerifyMode::exhaustive;
  if (text == "sampled") return VerifyMode::sampled;
  throw ParseError("unknown verification mode '" + std::string(text) + "'");
}

VerifyMode default_verify_mode(std::size_t code_size) noexcept {
  return code_size <= kExhaustiveLimit ? VerifyMode::exhaustive : VerifyMode::sampled;
}

std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::invalid_transition: return "invalid-transition";
    case ViolationKind::duplicate: return "duplicate";
    case ViolationKind::distance: return "distance";
    case ViolationKind::closure: return "closure";
  }
  return "?";
}

bool SnakeReport::valid() const noexcept {
  return transitions_ok && distinct && (!cyclic_claimed || cyclic_ok) &&
         (!min_distance || *min_distance >= required_distance);
}

std::string SnakeReport::summary_line() const {
  std::ostringstream os;
  os << "valid=" << (valid() ? "true" : "false") << " size=" << size << " min_d="
     << (min_distance ? std::to_string(*min_distance) : std::string("none"))
     << " metric=" << to_string(metric) << " bound=" << bound << " mode=" << to_string(mode);
  return os.str();
}

std::string SnakeReport::render() const {
  std::ostringstream os;
  os << "verification mode: " << to_string(mode) << "\n"
     << "  metric        " << to_string(metric) << "\n"
     << "  size          " << size << "\n"
     << "  transitions   " << (transitions_ok ? "ok" : "INVALID") << "\n"
     << "  distinct      " << (distinct ? "yes" : "no") << "\n"
     << "  cyclic        "
     << (cyclic_claimed ? (cyclic_ok ? "closes" : "DOES NOT CLOSE") : "not claimed") << "\n"
     << "  min distance  " << (min_distance ? std::to_string(*min_distance) : "none")
     << " (required " << required_distance << ")\n"
     << "  pairs checked " << pairs_checked << "\n"
     << "  parity        " << (uniform_parity ? "uniform" : "mixed") << "\n"
     << "  bound         " << bound << (within_bound() ? "" : " (EXCEEDED)") << "\n";
  if (violation_count > 0) {
    os << "  violations    " << violation_count << " (showing " << violations.size() << ")\n";
    for (const auto& v : violations) {
      os << "    " << to_string(v.kind) << " " << v.i << " " << v.j;
      if (v.kind == ViolationKind::distance) os << " d=" << v.distance;
      os << "\n";
    }
  }
  os << summary_line() << "\n";
  return os.str();
}

SnakeReport verify_code(const GrayCode& code, const VerifyOptions& opt) {
  SnakeReport rep;
  rep.size = code.size();
  rep.metric = code.metric;
  rep.mode = opt.mode;
  rep.cyclic_claimed = code.cyclic;
  // The snake size bound says nothing about plain Gray codes.
  rep.bound = opt.required_distance >= 2 ? bound_for(code.metric, code.n()) : 0;
  rep.required_distance = opt.required_distance;

  auto add = [&](Violation v) {
    ++rep.violation_count;
    if (rep.violations.size() < opt.max_violations) rep.violations.push_back(v);
  };

  for (std::size_t s = 0; s < code.transitions.size(); ++s) {
    if (code.transitions[s].index() > code.n()) {
      rep.transitions_ok = false;
      add({ViolationKind::invalid_transition, s + 1, 0, 0});
    }
  }
  if (code.cyclic && code.transitions.empty()) {
    rep.cyclic_ok = false;
    add({ViolationKind::closure, 0, 0, 0});
  }
  if (!rep.transitions_ok || rep.size == 0) return rep;

  const CodewordTable table = CodewordTable::from_code(code);
  const std::size_t m = table.rows();

  std::unordered_map<std::string_view, std::size_t> first_seen;
  first_seen.reserve(m * 2);
  const bool first_odd = row_is_odd(table.row(0));
  for (std::size_t i = 0; i < m; ++i) {
    const auto r = table.row(i);
    if (row_is_odd(r) != first_odd) rep.uniform_parity = false;
    std::string_view key(reinterpret_cast<const char*>(r.data()), r.size());
    auto [it, inserted] = first_seen.emplace(key, i);
    if (!inserted) {
      rep.distinct = false;
      add({ViolationKind::duplicate, it->second, i, 0});
    }
  }

  if (code.cyclic) {
    std::vector<int> last(table.row(m - 1).begin(), table.row(m - 1).end());
    push_to_top(last, code.transitions.back().index());
    const auto first = table.row(0);
    if (!std::equal(last.begin(), last.end(), first.begin())) {
      rep.cyclic_ok = false;
      add({ViolationKind::closure, m - 1, 0, 0});
    }
  }

  const auto dist = distance_fn(code.metric);
  PairScan scan = opt.mode == VerifyMode::exhaustive
                      ? scan_exhaustive(table, dist, opt.required_distance, opt.threads, opt.max_violations)
                      : scan_sampled(table, dist, code.cyclic, opt);
  rep.pairs_checked = scan.pairs;
  rep.min_distance = scan.min_distance;
  rep.violation_count += scan.bad;
  for (const auto& v : scan.violations) {
    if (rep.violations.size() >= opt.max_violations) break;
    rep.violations.push_back(v);
  }
  return rep;
}

SnakeReport verify_code(const GrayCode& code, VerifyMode mode) {
  VerifyOptions opt;
  opt.mode = mode;
  return verify_code(code, opt);
}

SnakeReport verify_code(const GrayCode& code) {
  return verify_code(code, default_verify_mode(code.size()));
}

MaxSnakeResult exhaustive_max_snake(int n, Metric metric, bool cyclic, std::uint64_t budget) {
  if (n < 2 || n > 5) {
    throw SizeLimitError("exhaustive_max_snake supports 2 <= n <= 5, got " + std::to_string(n));
  }
  detail::SearchRequest req;
  req.n = n;
  req.metric = metric;
  req.cyclic = cyclic;
  req.budget = budget;
  for (int t = n; t >= 2; --t) req.move_order.push_back(t);
  if (metric == Metric::kendall) {
    req.starts.push_back(Permutation::identity(n));
  } else {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i + 1;
    do {
      req.starts.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  const auto outcome = detail::run_snake_search(req);
  MaxSnakeResult res;
  res.best_size = outcome.best_size;
  res.witness = outcome.best;
  res.exhausted = outcome.exhausted;
  res.nodes = outcome.nodes;
  return res;
}

}  // namespace rankmod
