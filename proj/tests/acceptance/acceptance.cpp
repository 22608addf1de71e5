// Runs every acceptance criterion at its stated tolerance and time limit and
// prints one PASS/FAIL line per criterion. Exit status is non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "figures.hpp"
#include "oracle.hpp"
#include "properties.hpp"
#include "rankmod/blocks.hpp"
#include "rankmod/constructions.hpp"
#include "rankmod/counting.hpp"
#include "rankmod/document.hpp"
#include "rankmod/ksnake.hpp"
#include "rankmod/rmgc.hpp"
#include "rankmod/verify.hpp"

using namespace rankmod;

namespace {

const std::filesystem::path kGolden{RANKMOD_GOLDEN_DIR};

std::string read(const std::string& name) {
  std::ifstream in(kGolden / name, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Collects failed checks for one criterion.
struct Checks {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void property(const std::string& result, const std::string& what) {
    if (!result.empty()) failures.push_back(what + ": " + result);
  }
};

const std::vector<int>& indices_of(const TransitionSequence& ts, std::vector<int>& out) {
  out.clear();
  for (auto t : ts) out.push_back(t.index());
  return out;
}

std::string figure_text(const std::string& name) {
  for (const auto& f : cli::render_figures())
    if (f.file_name == name) return f.text;
  return {};
}

void rmgc_completeness(Checks& c) {
  for (int n = 3; n <= 7; ++n) {
    const auto& r = build_rmgc(n);
    std::vector<int> idx;
    indices_of(r.seq, idx);
    const auto code = oracle::walk(oracle::identity(n), idx, idx.size());
    const std::set<oracle::Perm> seen(code.begin(), code.end());
    const auto tag = "n=" + std::to_string(n);
    c.expect(r.seq.size() == factorial(n), tag + " length");
    c.expect(seen.size() == factorial(n), tag + " distinct count");
    c.expect(oracle::push(code.back(), idx.back()) == oracle::identity(n), tag + " closure");
    c.expect(index_at(r.seq, static_cast<std::size_t>(n)) == 2, tag + " t2 at n");
    c.expect(index_at(r.seq, static_cast<std::size_t>(n * n - n)) == n - 1, tag + " t_{n-1} at n^2-n");
    c.expect(index_at(r.seq, 1) == n, tag + " t_n at 1");
  }
}

void figure_blocks(Checks& c) {
  const Permutation s0{1, 4, 2, 6, 3, 5};
  const auto b1 = rotation_block(s0, BlockVariant::preserve);
  const auto b2 = rotation_block(s0, BlockVariant::exchange);
  c.expect(b1.transitions == make_sequence({3, 3, 4, 2, 3, 3, 2, 3}), "preserve transitions");
  c.expect(b2.transitions == make_sequence({3, 3, 4, 3, 3, 2, 3, 3}), "exchange transitions");
  c.expect(b1.end == Permutation({4, 2, 6, 1, 3, 5}), "preserve end");
  c.expect(b2.end == Permutation({4, 6, 2, 1, 3, 5}), "exchange end");
  c.expect(figure_text("fig1.txt") == read("fig1.txt"), "fig1.txt byte-identical");
  c.expect(figure_text("fig2.txt") == read("fig2.txt"), "fig2.txt byte-identical");
  c.expect(verify_code(b1.as_code(), VerifyMode::exhaustive).valid(), "preserve block is a snake");
  c.expect(verify_code(b2.as_code(), VerifyMode::exhaustive).valid(), "exchange block is a snake");
}

void six_snake(Checks& c) {
  const auto s = rmgc_snake(6);
  const auto rep = verify_code(s.code, VerifyMode::exhaustive);
  c.expect(s.code.size() == 54, "size 54");
  c.expect(s.code.cyclic && rep.cyclic_ok, "cyclic");
  c.expect(rep.valid() && rep.min_distance && *rep.min_distance >= 2, "min d >= 2");
  c.expect(rep.pairs_checked == 1431, "1431 pairs checked");
  c.expect(figure_text("fig3.txt") == read("fig3.txt"), "fig3.txt boundary rows");
  const auto w = s.code.codewords();
  c.expect(apply_transition(w.back(), s.code.transitions.back()) == w.front(), "sigma_54 = sigma_0");
  const auto doc = parse_document(read("thm1_n6.snake"));
  c.expect(doc.code == s.code, "committed document equals construction");
}

void rmgc_snake_sizes(Checks& c) {
  const std::pair<int, std::size_t> expected[] = {{7, 216}, {8, 672}, {9, 3360}};
  for (auto [n, m] : expected) {
    const auto s = rmgc_snake(n);
    const auto rep = verify_code(s.code, VerifyMode::exhaustive);
    const auto tag = "n=" + std::to_string(n);
    c.expect(s.code.size() == m, tag + " size");
    c.expect(rep.valid(), tag + " exhaustive verification");
    c.expect(rep.pairs_checked == m * (m - 1) / 2, tag + " all pairs");
  }
}

void embedded_ksnake(Checks& c) {
  const auto k = embedded_a5_snake();
  const auto rep = verify_ksnake(k);
  c.expect(k.size() == 57 && 57 == factorial(5) / 2 - 3, "size 57 = 5!/2 - 3");
  c.expect(rep.distinct && rep.cyclic_ok, "distinct and cyclic");
  c.expect(rep.min_distance && *rep.min_distance >= 2, "min d_K >= 2");
  c.expect(rep.uniform_parity, "uniform parity");
  c.expect(parse_ksnake(read("ksnake_a5.ksnake")) == k, "committed file equals embedded data");
  std::vector<int> idx;
  const auto rows = oracle::walk(oracle::identity(5), indices_of(k.transitions, idx), 57);
  c.expect(oracle::all_distinct(rows) && oracle::min_pairwise(rows, true) >= 2, "oracle agrees");
}

void lifted_seven(Checks& c) {
  const auto s = kendall_lifted_snake(7, embedded_a5_snake());
  const auto rep = verify_code(s.code, VerifyMode::exhaustive);
  c.expect(s.code.size() == 342, "size 342");
  c.expect(s.code.start == Permutation({2, 1, 3, 5, 7, 4, 6}), "start");
  c.expect(rep.valid() && rep.pairs_checked == 58311, "exhaustive over 58311 pairs");
  c.expect(figure_text("fig5.txt") == read("fig5.txt"), "fig5.txt boundary rows");
  c.expect(figure_text("fig4.txt") == read("fig4.txt"), "fig4.txt block columns");
  const auto w = s.code.codewords();
  c.expect(apply_transition(w.back(), s.code.transitions.back()) == w.front(), "sigma_342 = sigma_0");
  const auto t = size_table(7);
  const auto m1 = rmgc_snake(7).code.size();
  c.expect(t.m0 == 120 && t.m1 == 216 && t.m2 == 342, "size table row");
  c.expect(s.code.size() > m1 && m1 > t.m0, "342 > 216 > 120");
}

void bound_compliance(Checks& c) {
  for (int n = 6; n <= kMaxRmgcSnakeOrder; ++n) {
    c.expect(rmgc_snake(n).code.size() <= linf_snake_bound(n), "rmgc snake n=" + std::to_string(n));
  }
  for (int n : {7, 9}) {
    const auto s = kendall_lifted_snake(n, embedded_a5_snake());
    c.expect(s.code.size() <= linf_snake_bound(n), "lifted snake n=" + std::to_string(n));
  }
  for (int n = 4; n <= 20; ++n) {
    const auto t = size_table(n);
    c.expect(t.m0 <= t.bound && (!t.m1 || *t.m1 <= t.bound) && (!t.m2 || *t.m2 <= t.bound),
             "size table n=" + std::to_string(n));
  }
  const auto best = exhaustive_max_snake(4, Metric::linf, true);
  c.expect(best.exhausted, "n=4 oracle exhausted");
  c.expect(best.best_size == 6 && linf_snake_bound(4) == 6, "n=4 maximum equals bound 6");
}

void property_suites(Checks& c) {
  c.property(props::parity_flip(101, 5000), "parity flip");
  c.property(props::kendall_right_invariance(102, 1000), "kendall right invariance");
  c.property(props::metric_axioms(103, 2000), "metric axioms");
  c.property(props::transport_invariants(104, 20), "transport");
  c.property(props::mutations_detected(parse_document(read("thm1_n6.snake")).code, 1), "mutations n=6");
  c.property(props::mutations_detected(parse_ksnake(read("ksnake_a5.ksnake")).as_code(), 1),
             "mutations K-snake");
  c.property(props::mutations_detected(kendall_lifted_snake(7, embedded_a5_snake()).code, 1),
             "mutations n=7 lifted");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Checks&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "RMGC completeness n=3..7", 5, rmgc_completeness},
      {2, "rotation blocks reproduce figures 1 and 2", 1, figure_blocks},
      {3, "n=6 snake: size 54, 1431 pairs, boundary table", 1, six_snake},
      {4, "rmgc snake sizes 216 / 672 / 3360", 30, rmgc_snake_sizes},
      {5, "embedded (5,57) K-snake", 1, embedded_ksnake},
      {6, "n=7 lifted snake: size 342, 58311 pairs, boundary table", 5, lifted_seven},
      {7, "bound compliance and n=4 oracle", 60, bound_compliance},
      {8, "property suites and mutation detection", 30, property_suites},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checks checks;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(checks);
    } catch (const std::exception& e) {
      checks.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) checks.failures.push_back("took longer than the time limit");
    const bool ok = checks.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", cr.id, cr.name, secs,
                cr.limit_s);
    for (const auto& f : checks.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
