#include "rankmod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rankmod/errors.hpp"

namespace rankmod {

namespace {

void validate_bijection(const std::vector<int>& entries) {
  const auto n = entries.size();
  if (n == 0) throw InvalidPermutation("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < n; ++i) {
    const int v = entries[i];
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw InvalidPermutation("value " + std::to_string(v) + " at position " +
                               std::to_string(i + 1) + " is outside 1.." +
                               std::to_string(n));
    }
    if (seen[v]) throw InvalidPermutation("value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

void require_same_length(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw LengthMismatch("length mismatch: " + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()));
  }
}

int parse_int(std::string_view token) {
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

template <typename F>
void for_each_token(std::string_view text, F&& f) {
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '[' || c == ']' ||
           c == '(' || c == ')';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    if (j > i) f(text.substr(i, j - i));
    i = j;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  validate_bijection(entries_);
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidPermutation("identity needs n >= 1");
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  for_each_token(text, [&](std::string_view tok) { values.push_back(parse_int(tok)); });
  if (values.empty()) throw ParseError("empty permutation");
  return Permutation(std::move(values));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) {
    throw std::out_of_range("position " + std::to_string(position) + " outside 1.." +
                            std::to_string(size()));
  }
  return entries_[position - 1];
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (int v : p.entries()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ULL;
  }
  return h;
}

Transition::Transition(int index) : index_(index) {
  if (index < 2) {
    throw InvalidTransition("transition index " + std::to_string(index) + " is below 2");
  }
}

Transition Transition::parse(std::string_view token) {
  if (!token.empty() && (token.front() == 't' || token.front() == 'T')) token.remove_prefix(1);
  if (token.empty()) throw ParseError("empty transition token");
  int idx = 0;
  try {
    idx = parse_int(token);
  } catch (const ParseError&) {
    throw ParseError("bad transition token '" + std::string(token) + "'");
  }
  if (idx < 2) throw ParseError("transition index " + std::to_string(idx) + " is below 2");
  return Transition(idx);
}

std::string Transition::to_string() const { return "t" + std::to_string(index_); }

std::ostream& operator<<(std::ostream& os, Transition t) { return os << t.to_string(); }

int index_at(const TransitionSequence& seq, std::size_t j) {
  if (j < 1 || j > seq.size()) {
    throw std::out_of_range("sequence index " + std::to_string(j) + " outside 1.." +
                            std::to_string(seq.size()));
  }
  return seq[j - 1].index();
}

TransitionSequence make_sequence(std::initializer_list<int> indices) {
  TransitionSequence out;
  out.reserve(indices.size());
  for (int i : indices) out.emplace_back(i);
  return out;
}

std::string format_sequence(const TransitionSequence& seq) {
  std::string out;
  out.reserve(seq.size() * 3);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ' ';
    out += seq[i].to_string();
  }
  return out;
}

TransitionSequence parse_sequence(std::string_view text) {
  TransitionSequence out;
  for_each_token(text, [&](std::string_view tok) { out.push_back(Transition::parse(tok)); });
  return out;
}

void push_to_top(std::span<int> entries, int index) noexcept {
  std::rotate(entries.begin(), entries.begin() + (index - 1), entries.begin() + index);
}

Permutation apply_transition(const Permutation& p, Transition t) {
  if (t.index() > p.size()) {
    throw InvalidTransition("transition " + t.to_string() + " out of range for n=" +
                            std::to_string(p.size()));
  }
  std::vector<int> e = p.entries();
  push_to_top(e, t.index());
  return Permutation(std::move(e));
}

std::vector<Permutation> apply_sequence(const Permutation& p, const TransitionSequence& ts) {
  std::vector<Permutation> out;
  out.reserve(ts.size() + 1);
  out.push_back(p);
  for (Transition t : ts) out.push_back(apply_transition(out.back(), t));
  return out;
}

Permutation apply_all(const Permutation& p, const TransitionSequence& ts) {
  std::vector<int> e = p.entries();
  for (Transition t : ts) {
    if (t.index() > p.size()) {
      throw InvalidTransition("transition " + t.to_string() + " out of range for n=" +
                              std::to_string(p.size()));
    }
    push_to_top(e, t.index());
  }
  return Permutation(std::move(e));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_length(p, q);
  std::vector<int> r(p.entries().size());
  for (int i = 1; i <= p.size(); ++i) r[i - 1] = q(p(i));
  return Permutation(std::move(r));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> r(p.entries().size());
  for (int i = 1; i <= p.size(); ++i) r[p(i) - 1] = i;
  return Permutation(std::move(r));
}

Parity parity(const Permutation& p) noexcept {
  // n minus the number of cycles is the transposition count.
  const int n = p.size();
  std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (visited[i]) continue;
    ++cycles;
    for (int j = i; !visited[j]; j = p(j)) visited[j] = true;
  }
  return (n - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::string_view to_string(Parity parity) noexcept {
  return parity == Parity::even ? "even" : "odd";
}

int linf_distance(const Permutation& p, const Permutation& q) {
  require_same_length(p, q);
  int d = 0;
  for (int i = 1; i <= p.size(); ++i) d = std::max(d, std::abs(p(i) - q(i)));
  return d;
}

int kendall_distance(const Permutation& p, const Permutation& q) {
  require_same_length(p, q);
  const int n = p.size();
  std::vector<int> pos_in_q(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) pos_in_q[q(i)] = i;
  std::vector<int> seq(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) seq[i - 1] = pos_in_q[p(i)];
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions;
}

}  // namespace rankmod
