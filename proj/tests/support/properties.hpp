#pragma once

// Randomized property checks, shared by the unit tests and the acceptance
// runner. Each returns an empty string on success or a description of the
// first counterexample.

#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/ksnake.hpp"
#include "rankmod/permutation.hpp"
#include "rankmod/verify.hpp"

namespace props {

using rankmod::Permutation;

inline std::string parity_flip(unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Permutation p(oracle::random_perm(n, rng));
    const int i = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const Permutation q = rankmod::apply_transition(p, rankmod::Transition(i));
    const bool flipped = rankmod::parity(p) != rankmod::parity(q);
    if (flipped != (i % 2 == 0)) return "t" + std::to_string(i) + " on [" + p.to_string() + "]";
    if (oracle::is_odd(q.entries()) != (rankmod::parity(q) == rankmod::Parity::odd)) {
      return "parity disagrees with inversion count on [" + q.to_string() + "]";
    }
  }
  return {};
}

inline std::string inverse_identity(unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const Permutation p(oracle::random_perm(n, rng));
    const auto e = Permutation::identity(n);
    if (rankmod::compose(p, rankmod::inverse(p)) != e || rankmod::compose(rankmod::inverse(p), p) != e) {
      return "[" + p.to_string() + "]";
    }
  }
  return {};
}

inline std::string metric_axioms(unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Permutation a(oracle::random_perm(n, rng));
    const Permutation b(oracle::random_perm(n, rng));
    const Permutation c(oracle::random_perm(n, rng));
    for (int m = 0; m < 2; ++m) {
      auto d = [m](const Permutation& x, const Permutation& y) {
        return m == 0 ? rankmod::linf_distance(x, y) : rankmod::kendall_distance(x, y);
      };
      const char* name = m == 0 ? "linf" : "kendall";
      std::ostringstream why;
      why << name << " on [" << a << "] [" << b << "] [" << c << "]";
      if (d(a, a) != 0) return why.str() + ": d(a,a) != 0";
      if ((d(a, b) == 0) != (a == b)) return why.str() + ": indiscernibles";
      if (d(a, b) != d(b, a)) return why.str() + ": symmetry";
      if (d(a, c) > d(a, b) + d(b, c)) return why.str() + ": triangle";
    }
  }
  return {};
}

inline std::string kendall_right_invariance(unsigned seed, int trials) {
  std::mt19937 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Permutation p(oracle::random_perm(n, rng));
    const Permutation q(oracle::random_perm(n, rng));
    const Permutation r(oracle::random_perm(n, rng));
    if (rankmod::kendall_distance(p, q) !=
        rankmod::kendall_distance(rankmod::compose(p, r), rankmod::compose(q, r))) {
      return "[" + p.to_string() + "] [" + q.to_string() + "] by [" + r.to_string() + "]";
    }
  }
  return {};
}

// Two distinct permutations of equal parity whose first l+1 entries hold
// one value of one parity class among all values of the other class, and
// whose remaining entries agree, are at l_inf distance at least 2.
inline std::string odd_one_out(unsigned seed, int trials) {
  std::mt19937 rng(seed);
  int checked = 0;
  for (int t = 0; checked < trials && t < 50 * trials; ++t) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int front_parity = static_cast<int>(rng() % 2);
    std::vector<int> front, rest;
    for (int v = 1; v <= n; ++v) (v % 2 == front_parity ? front : rest).push_back(v);
    if (rest.empty()) continue;
    std::shuffle(rest.begin(), rest.end(), rng);
    front.push_back(rest.back());
    rest.pop_back();
    auto make = [&] {
      std::vector<int> f = front;
      std::shuffle(f.begin(), f.end(), rng);
      f.insert(f.end(), rest.begin(), rest.end());
      return f;
    };
    const auto s1 = make();
    const auto s2 = make();
    if (s1 == s2 || oracle::is_odd(s1) != oracle::is_odd(s2)) continue;
    ++checked;
    if (rankmod::linf_distance(Permutation(s1), Permutation(s2)) < 2) {
      return "[" + Permutation(s1).to_string() + "] [" + Permutation(s2).to_string() + "]";
    }
  }
  return checked == trials ? std::string{} : "generator produced too few cases";
}

inline std::string transport_invariants(unsigned seed, int starts) {
  std::mt19937 rng(seed);
  const auto base = rankmod::embedded_a5_snake();
  const auto base_rep = rankmod::verify_ksnake(base);
  for (int t = 0; t < starts; ++t) {
    const Permutation s(oracle::random_perm(5, rng));
    const auto moved = rankmod::transport(base, s);
    const auto rep = rankmod::verify_ksnake(moved);
    if (rep.size != base_rep.size || rep.min_distance != base_rep.min_distance ||
        !rep.uniform_parity || !rankmod::is_valid_ksnake(rep)) {
      return "start [" + s.to_string() + "]: " + rep.summary_line();
    }
  }
  return {};
}

// Every index change at every position must be caught. `stride` > 1 checks
// every stride-th position only.
inline std::string mutations_detected(const rankmod::GrayCode& code, std::size_t stride,
                                      std::size_t* tried = nullptr) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < code.transitions.size(); j += stride) {
    for (int i = 2; i <= code.n(); ++i) {
      if (i == code.transitions[j].index()) continue;
      auto mutated = code;
      mutated.transitions[j] = rankmod::Transition(i);
      ++count;
      const auto rep = rankmod::verify_code(mutated, rankmod::VerifyMode::exhaustive);
      if (rep.valid() || (rep.violations.empty() && rep.distinct)) {
        return "position " + std::to_string(j) + " -> t" + std::to_string(i) + " passed";
      }
    }
  }
  if (tried) *tried = count;
  return {};
}

}  // namespace props
