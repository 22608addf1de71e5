#include <gtest/gtest.h>

#include "properties.hpp"

using namespace rankmod;

TEST(Properties, ParityFlipRule) { EXPECT_EQ(props::parity_flip(1, 5000), ""); }

TEST(Properties, ComposeWithInverseIsIdentity) { EXPECT_EQ(props::inverse_identity(2, 2000), ""); }

TEST(Properties, MetricAxioms) { EXPECT_EQ(props::metric_axioms(3, 2000), ""); }

TEST(Properties, KendallRightInvariance) { EXPECT_EQ(props::kendall_right_invariance(4, 1000), ""); }

TEST(Properties, LinfIsNotRightInvariant) {
  const Permutation p{1, 2, 3}, q{2, 1, 3}, r{1, 3, 2};
  EXPECT_EQ(linf_distance(p, q), 1);
  EXPECT_EQ(linf_distance(compose(p, r), compose(q, r)), 2);
}

TEST(Properties, OddOneOutSeparation) { EXPECT_EQ(props::odd_one_out(5, 2000), ""); }

TEST(Properties, TransportKeepsSnakeInvariants) { EXPECT_EQ(props::transport_invariants(6, 20), ""); }

TEST(Properties, MutationsDetected) {
  std::size_t tried = 0;
  EXPECT_EQ(props::mutations_detected(rmgc_snake(6).code, 1, &tried), "");
  EXPECT_EQ(tried, 54u * 4u);
  EXPECT_EQ(props::mutations_detected(embedded_a5_snake().as_code(), 1), "");
  EXPECT_EQ(props::mutations_detected(rmgc_snake(7).code, 1), "");
  EXPECT_EQ(props::mutations_detected(kendall_lifted_snake(7, embedded_a5_snake()).code, 7), "");
}
