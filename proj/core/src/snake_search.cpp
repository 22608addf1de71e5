#include "snake_search.hpp"

#include <algorithm>
#include <numeric>

#include "rankmod/counting.hpp"
#include "rankmod/errors.hpp"

namespace rankmod::detail {

namespace {

// All permutations of [n] indexed by lexicographic rank, with the
// push-to-the-top successor table and the radius-1 ball of every element.
class PermutationSpace {
 public:
  PermutationSpace(int n, Metric metric) : n_(n), count_(factorial(n)) {
    perms_.resize(count_ * n);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::size_t r = 0;
    do {
      std::copy(p.begin(), p.end(), perms_.begin() + static_cast<std::ptrdiff_t>(r * n));
      ++r;
    } while (std::next_permutation(p.begin(), p.end()));

    next_.resize(count_ * n, 0);
    ball_.resize(count_);
    const auto patterns = metric == Metric::linf ? value_swap_patterns() : std::vector<std::vector<int>>{};
    std::vector<int> q(n);
    for (std::size_t i = 0; i < count_; ++i) {
      const int* e = &perms_[i * n];
      for (int t = 2; t <= n; ++t) {
        std::copy(e, e + n, q.begin());
        std::rotate(q.begin(), q.begin() + (t - 1), q.begin() + t);
        next_[i * n + t - 1] = rank(q);
      }
      auto& ball = ball_[i];
      if (metric == Metric::kendall) {
        ball.push_back(static_cast<std::uint32_t>(i));
        for (int pos = 0; pos + 1 < n; ++pos) {
          std::copy(e, e + n, q.begin());
          std::swap(q[pos], q[pos + 1]);
          ball.push_back(rank(q));
        }
      } else {
        // d_inf <= 1 exactly when the values are relabeled by a product of
        // disjoint transpositions (v v+1).
        for (const auto& swaps : patterns) {
          for (int k = 0; k < n; ++k) {
            int v = e[k];
            if (swaps[v - 1] != 0) v += swaps[v - 1];
            q[k] = v;
          }
          ball.push_back(rank(q));
        }
      }
    }
  }

  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] std::uint32_t next(std::uint32_t r, int t) const noexcept {
    return next_[r * n_ + t - 1];
  }
  [[nodiscard]] const std::vector<std::uint32_t>& ball(std::uint32_t r) const noexcept {
    return ball_[r];
  }
  [[nodiscard]] Permutation permutation(std::uint32_t r) const {
    return Permutation(std::vector<int>(perms_.begin() + r * n_, perms_.begin() + (r + 1) * n_));
  }

  [[nodiscard]] std::uint32_t rank(const std::vector<int>& p) const {
    std::uint64_t r = 0;
    for (int i = 0; i < n_; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n_; ++j)
        if (p[j] < p[i]) ++smaller;
      r = r * static_cast<std::uint64_t>(n_ - i) + static_cast<std::uint64_t>(smaller);
    }
    return static_cast<std::uint32_t>(r);
  }

 private:
  // Each pattern maps value v to v + pattern[v-1], a product of disjoint
  // adjacent transpositions (including the identity).
  std::vector<std::vector<int>> value_swap_patterns() const {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n_, 0);
    auto rec = [&](auto&& self, int v) -> void {
      if (v >= n_) {
        out.push_back(cur);
        return;
      }
      self(self, v + 1);
      if (v + 1 < n_) {
        cur[v] = 1;
        cur[v + 1] = -1;
        self(self, v + 2);
        cur[v] = 0;
        cur[v + 1] = 0;
      }
    };
    rec(rec, 0);
    return out;
  }

  int n_;
  std::size_t count_;
  std::vector<int> perms_;
  std::vector<std::uint32_t> next_;
  std::vector<std::vector<std::uint32_t>> ball_;
};

class Searcher {
 public:
  Searcher(const SearchRequest& req, const PermutationSpace& space)
      : req_(req), space_(space), blocked_(space.count(), 0) {}

  // Returns false when the budget ran out.
  bool run_from(std::uint32_t start, SearchOutcome& out) {
    start_ = start;
    std::fill(blocked_.begin(), blocked_.end(), 0);
    available_ = space_.count();
    path_.clear();
    moves_.clear();
    preds_.clear();
    for (int t = 2; t <= req_.n; ++t) {
      for (std::uint32_t r = 0; r < space_.count(); ++r) {
        if (space_.next(r, t) == start) {
          preds_.push_back(r);
          break;
        }
      }
    }
    push(start);
    if (!req_.cyclic) record(out, false);
    const bool ok = dfs(out);
    pop();
    return ok;
  }

  [[nodiscard]] bool found_target(const SearchOutcome& out) const {
    return req_.target != 0 && out.best_size >= req_.target;
  }

 private:
  std::size_t needed(const SearchOutcome& out) const {
    return req_.target != 0 ? req_.target : out.best_size + 1;
  }

  void push(std::uint32_t r) {
    for (auto b : space_.ball(r))
      if (blocked_[b]++ == 0) --available_;
    path_.push_back(r);
  }

  void pop() {
    const auto r = path_.back();
    path_.pop_back();
    for (auto b : space_.ball(r))
      if (--blocked_[b] == 0) ++available_;
  }

  void record(SearchOutcome& out, bool closing) {
    const std::size_t size = path_.size();
    if (size <= out.best_size) return;
    out.best_size = size;
    GrayCode code{space_.permutation(start_), {}, req_.cyclic, req_.metric};
    for (int t : moves_) code.transitions.emplace_back(t);
    if (closing) code.transitions.emplace_back(closing_move_);
    out.best = std::move(code);
  }

  bool closure_possible(std::uint32_t cur) const {
    for (auto p : preds_)
      if (p == cur || blocked_[p] == 0) return true;
    return false;
  }

  bool dfs(SearchOutcome& out) {
    if (++out.nodes > req_.budget) return false;
    const auto cur = path_.back();
    if (req_.cyclic) {
      for (int t : req_.move_order) {
        if (space_.next(cur, t) == start_ && path_.size() >= 2) {
          closing_move_ = t;
          record(out, true);
          if (found_target(out)) return true;
          break;
        }
      }
      if (!closure_possible(cur)) return true;
    }
    if (path_.size() + available_ < needed(out)) return true;
    for (int t : req_.move_order) {
      const auto nxt = space_.next(cur, t);
      if (blocked_[nxt] != 0) continue;
      push(nxt);
      moves_.push_back(t);
      if (!req_.cyclic) record(out, false);
      const bool ok = dfs(out);
      moves_.pop_back();
      pop();
      if (!ok) return false;
      if (found_target(out)) return true;
      if (path_.size() + available_ < needed(out)) return true;
    }
    return true;
  }

  const SearchRequest& req_;
  const PermutationSpace& space_;
  std::vector<std::uint16_t> blocked_;
  std::size_t available_ = 0;
  std::uint32_t start_ = 0;
  int closing_move_ = 0;
  std::vector<std::uint32_t> path_;
  std::vector<int> moves_;
  std::vector<std::uint32_t> preds_;
};

}  // namespace

SearchOutcome run_snake_search(const SearchRequest& req) {
  if (req.n < 2 || req.n > kMaxSearchOrder) {
    throw SizeLimitError("snake search supports 2 <= n <= " + std::to_string(kMaxSearchOrder));
  }
  for (int t : req.move_order) {
    if (t < 2 || t > req.n) throw InvalidTransition("search move t" + std::to_string(t) + " out of range");
  }
  PermutationSpace space(req.n, req.metric);
  Searcher searcher(req, space);
  SearchOutcome out;
  bool complete = true;
  for (const auto& s : req.starts) {
    if (s.size() != req.n) throw LengthMismatch("search start has wrong length");
    if (!searcher.run_from(space.rank(s.entries()), out)) {
      complete = false;
      break;
    }
    if (searcher.found_target(out)) break;
  }
  out.exhausted = complete && !searcher.found_target(out);
  return out;
}

}  // namespace rankmod::detail
