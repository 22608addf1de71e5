#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rankmod/counting.hpp"
#include "rankmod/errors.hpp"
#include "rankmod/ksnake.hpp"

using namespace rankmod;

namespace {

std::vector<oracle::Perm> rows(const KendallSnake& s) {
  std::vector<int> idx;
  for (auto t : s.transitions) idx.push_back(t.index());
  return oracle::walk(s.start.entries(), idx, s.size());
}

// Oracle check of every K-snake property.
void expect_ksnake(const KendallSnake& s) {
  const auto r = rows(s);
  EXPECT_TRUE(oracle::all_distinct(r));
  EXPECT_GE(oracle::min_pairwise(r, true), 2);
  EXPECT_EQ(oracle::push(r.back(), s.transitions.back().index()), s.start.entries());
  for (const auto& row : r) EXPECT_EQ(oracle::is_odd(row), oracle::is_odd(r.front()));
  EXPECT_TRUE(is_valid_ksnake(verify_ksnake(s)));
}

}  // namespace

TEST(EmbeddedSnake, Shape) {
  const auto k = embedded_a5_snake();
  EXPECT_EQ(k.size(), 57u);
  EXPECT_EQ(k.size(), factorial(5) / 2 - 3);
  EXPECT_EQ(k.start, Permutation::identity(5));
  EXPECT_EQ(k.transitions.back(), Transition(5));
  const auto period = make_sequence({3, 3, 5, 3, 3, 5, 3, 5, 5, 3, 3, 5, 3, 3, 5, 3, 5, 5, 5});
  EXPECT_EQ(a5_snake_period(), period);
  EXPECT_TRUE(std::equal(period.begin(), period.end(), k.transitions.begin()));
  for (std::size_t j = 0; j < k.size(); ++j) EXPECT_EQ(k.transitions[j], period[j % 19]);
}

TEST(EmbeddedSnake, VerifiesAsKendallSnake) {
  const auto k = embedded_a5_snake();
  expect_ksnake(k);
  const auto rep = verify_ksnake(k);
  EXPECT_EQ(rep.size, 57u);
  EXPECT_TRUE(rep.distinct);
  EXPECT_TRUE(rep.cyclic_ok);
  EXPECT_TRUE(rep.uniform_parity);
  ASSERT_TRUE(rep.min_distance);
  EXPECT_GE(*rep.min_distance, 2);
  EXPECT_EQ(rep.pairs_checked, 57u * 56u / 2u);
}

TEST(Transport, Examples) {
  const auto k = embedded_a5_snake();
  EXPECT_EQ(transport(k, Permutation::identity(5)), k);
  const auto odd = transport(k, Permutation{2, 1, 3, 4, 5});
  expect_ksnake(odd);
  for (const auto& row : rows(odd)) EXPECT_TRUE(oracle::is_odd(row));
  expect_ksnake(transport(k, Permutation{2, 1, 3, 5, 4}));
  EXPECT_THROW((void)transport(k, Permutation::identity(4)), LengthMismatch);
}

TEST(KsnakeText, RoundTrip) {
  const auto k = embedded_a5_snake();
  const auto text = format_ksnake(k);
  EXPECT_EQ(text.substr(0, text.find('\n')), "ksnake n=5 size=57");
  EXPECT_EQ(parse_ksnake(text), k);
  EXPECT_EQ(import_ksnake(text), k);
}

TEST(KsnakeText, Rejections) {
  EXPECT_THROW((void)import_ksnake(""), ParseError);
  EXPECT_THROW((void)import_ksnake("ksnake n=5 size=57\n1 2 3 4 5\n"), ParseError);
  EXPECT_THROW((void)import_ksnake("ksnake n=5 size=2\n1 2 3 4\n3 3\n"), ParseError);
  EXPECT_THROW((void)import_ksnake("ksnake n=5 size=3\n1 2 3 4 5\n3 3 5\n"), VerificationError);

  // Flip one t5 to t4.
  auto k = embedded_a5_snake();
  k.transitions[2] = Transition(4);
  try {
    (void)import_ksnake(format_ksnake(k));
    FAIL() << "mutated snake accepted";
  } catch (const VerificationError& e) {
    EXPECT_NE(std::string(e.what()).find("failed verification"), std::string::npos);
  }
}

TEST(KsnakeSearch, SmallCases) {
  const auto s3 = search_ksnake(3, 3, 1'000'000);
  ASSERT_TRUE(s3.snake);
  EXPECT_EQ(s3.snake->size(), 3u);
  expect_ksnake(*s3.snake);
  EXPECT_FALSE(search_ksnake(3, 4, 1'000'000).snake);
  EXPECT_TRUE(search_ksnake(3, 4, 1'000'000).exhausted);
}

TEST(KsnakeSearch, FourAgreesWithOracle) {
  const std::size_t best = oracle::max_snake(4, true, true, true, true);
  const auto hit = search_ksnake(4, best, 10'000'000);
  ASSERT_TRUE(hit.snake);
  expect_ksnake(*hit.snake);
  const auto miss = search_ksnake(4, best + 1, 10'000'000);
  EXPECT_FALSE(miss.snake);
  EXPECT_TRUE(miss.exhausted);
}

TEST(KsnakeSearch, FindsFiftySevenInFive) {
  const auto r = search_ksnake(5, 57, 50'000'000);
  ASSERT_TRUE(r.snake);
  EXPECT_GE(r.snake->size(), 57u);
  expect_ksnake(*r.snake);
}

TEST(KsnakeSearch, BudgetIsRespected) {
  const auto r = search_ksnake(5, 58, 1000);
  EXPECT_FALSE(r.snake);
  EXPECT_FALSE(r.exhausted);
  EXPECT_LE(r.nodes, 1001u);
}
